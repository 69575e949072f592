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

/**
 * @file
 * Dense statevector simulation of the circuit IR.
 *
 * Amplitude i belongs to the basis word whose big-endian value is i, so
 * bit `wire` of the index is the state of that wire.
 */

#pragma once

#include <span>
#include <vector>

#include "betheprep/circuit.hpp"
#include "betheprep/coefficients.hpp"

namespace betheprep {

inline constexpr int kDefaultWireCap = 22;

class StateVector {
  public:
    StateVector() = default;
    /// Takes ownership of 2^n_wires amplitudes.
    StateVector(int n_wires, std::vector<Complex> amps);

    [[nodiscard]] int n_wires() const noexcept { return n_wires_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amps() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amps() noexcept { return amps_; }
    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;

  private:
    int n_wires_ = 0;
    std::vector<Complex> amps_;
};

/// |0...0> on L wires. Throws ResourceError above `cap`.
StateVector zero_state(int L, int cap = kDefaultWireCap);

/// Applies one gate in place; only indices with every control set move.
void apply_in_place(StateVector &state, const Gate &gate);

StateVector apply(StateVector state, const Gate &gate);

/// Applies the gates in list order. Throws DomainError on a wire mismatch.
StateVector run(StateVector state, const Circuit &circuit);

/// f(w)/F({}) at basis_index(w), zero elsewhere.
StateVector target_state(const AmplitudeTable &table,
                         int cap = kDefaultWireCap);

/// <a|b>, conjugate-linear in a.
Complex overlap(const StateVector &a, const StateVector &b);

} // namespace betheprep
