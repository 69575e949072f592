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

#include "betheprep/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace betheprep {

StateVector::StateVector(int n_wires, std::vector<Complex> amps)
    : n_wires_(n_wires), amps_(std::move(amps)) {
    if (n_wires < 0 || n_wires > BitString::kMaxLength ||
        amps_.size() != (std::size_t{1} << n_wires)) {
        throw DomainError("state vector needs 2^" + std::to_string(n_wires) +
                          " amplitudes, got " + std::to_string(amps_.size()));
    }
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateVector zero_state(int L, int cap) {
    if (L < 1) {
        throw DomainError("zero_state needs at least one wire");
    }
    if (L > cap) {
        throw ResourceError("requested " + std::to_string(L) +
                            " wires, above the cap of " + std::to_string(cap));
    }
    std::vector<Complex> amps(std::size_t{1} << L);
    amps[0] = 1.0;
    return {L, std::move(amps)};
}

void apply_in_place(StateVector &state, const Gate &gate) {
    const int n = state.n_wires();
    if (gate.target < 0 || gate.target >= n) {
        throw DomainError("gate target outside the register");
    }
    std::uint64_t control_mask = 0;
    std::vector<int> fixed{gate.target};
    for (const int c : gate.controls) {
        if (c < 0 || c >= n) {
            throw DomainError("gate control outside the register");
        }
        control_mask |= std::uint64_t{1} << c;
        fixed.push_back(c);
    }
    std::sort(fixed.begin(), fixed.end());
    const std::uint64_t target_bit = std::uint64_t{1} << gate.target;

    const auto u = gate.matrix();
    const std::uint64_t free_count =
        std::uint64_t{1} << (n - static_cast<int>(fixed.size()));
    std::span<Complex> amps = state.amps();

    // Spread the free counter around the fixed wires, then set controls.
    for (std::uint64_t r = 0; r < free_count; ++r) {
        std::uint64_t i0 = r;
        for (const int w : fixed) {
            const std::uint64_t low = i0 & ((std::uint64_t{1} << w) - 1U);
            i0 = ((i0 >> w) << (w + 1)) | low;
        }
        i0 |= control_mask;
        const std::uint64_t i1 = i0 | target_bit;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

StateVector apply(StateVector state, const Gate &gate) {
    apply_in_place(state, gate);
    return state;
}

StateVector run(StateVector state, const Circuit &circuit) {
    if (circuit.n_wires != state.n_wires()) {
        throw DomainError("circuit has " + std::to_string(circuit.n_wires) +
                          " wires but the state has " +
                          std::to_string(state.n_wires()));
    }
    for (const Gate &g : circuit.gates) {
        apply_in_place(state, g);
    }
    return state;
}

StateVector target_state(const AmplitudeTable &table, int cap) {
    StateVector state = zero_state(table.L(), cap);
    state[0] = 0.0;
    // F({}) from the tail definition keeps the phase convention of the
    // circuit when P(L, M) has a single word.
    const Complex norm = tail_F(table, BitString{});
    for (std::size_t i = 0; i < table.words().size(); ++i) {
        state[basis_index(table.words()[i])] = table.values()[i] / norm;
    }
    return state;
}

Complex overlap(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw DomainError("overlap of states with different sizes");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

} // namespace betheprep
