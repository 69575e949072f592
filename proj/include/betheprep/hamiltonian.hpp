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

#include <span>
#include <vector>

#include "betheprep/simulator.hpp"

namespace betheprep {

/// Matrix-free XXZ-type operator on L spins, sigma^z|0> = +|0>.
///
/// Each bond contributes `hop` between the two anti-aligned configurations
/// of its pair and `anti_aligned` on their diagonal; each field adds
/// `when_one` to the diagonal when its wire holds a 1.
class OperatorMatrix {
  public:
    struct Bond {
        int wire_a;
        int wire_b;
        double hop;
        double anti_aligned;
    };
    struct Field {
        int wire;
        double when_one;
    };

    OperatorMatrix(int L, std::vector<Bond> bonds, std::vector<Field> fields,
                   double constant);

    [[nodiscard]] int L() const noexcept { return L_; }

    [[nodiscard]] double diagonal(std::uint64_t index) const;

    /// out = H in. Sizes must be 2^L; `in` and `out` must not alias.
    void apply(std::span<const Complex> in, std::span<Complex> out) const;
    [[nodiscard]] StateVector apply(const StateVector &state) const;

    /// Row-major dense matrix, for L <= kMaxDenseWires.
    [[nodiscard]] std::vector<double> dense() const;

    static constexpr int kMaxDenseWires = 12;

  private:
    int L_;
    std::vector<Bond> bonds_;
    std::vector<Field> fields_;
    double constant_;
};

/// Periodic chain: -1/2 sum_n (XX + YY + delta (ZZ - 1)), n = 1..L.
OperatorMatrix build_closed(int L, double delta);

/// Open chain with boundary fields and the +1/2 (h + h') identity shift.
OperatorMatrix build_open(int L, double delta, double h, double h_prime);

/// Total S^z = 1/2 sum_n sigma^z_n.
OperatorMatrix sz(int L);

/// || H psi - E psi ||_2.
double eigen_residual(const OperatorMatrix &H, const StateVector &state,
                      double E);

/// <psi|H|psi>.
Complex expectation(const OperatorMatrix &H, const StateVector &state);

} // namespace betheprep
