// Copyright 2026 The betheprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "betheprep/coefficients.hpp"

namespace betheprep {

/// Per-root Bethe-equation residuals in LHS - RHS form.
///
/// A root whose equation divides by zero is flagged in `singular` and
/// carries an infinite residual.
struct ResidualReport {
    std::vector<Complex> per_root;
    std::vector<bool> singular;
    double max_abs = 0.0;
    std::vector<std::string> warnings;
};

ResidualReport closed_residuals(const BetheRoots &roots, double delta, int L);

ResidualReport open_residuals(const BetheRoots &roots, double delta, double h,
                              double h_prime, int L);

/// Residuals for whichever boundary `chain` names.
ResidualReport bethe_residuals(const ChainSpec &chain, const BetheRoots &roots,
                               int L);

struct EnergyReport {
    Complex value;
    /// False when the imaginary part exceeds kEnergyImagTolerance.
    bool is_real = true;

    [[nodiscard]] double real() const noexcept { return value.real(); }
};

inline constexpr double kEnergyImagTolerance = 1e-10;

/// E = sum_j 2 (delta - cos k_j).
EnergyReport energy(const BetheRoots &roots, double delta);

/// S^z eigenvalue L/2 - M of a weight-M state.
inline double sz_eigenvalue(int L, int M) { return 0.5 * L - M; }

} // namespace betheprep
