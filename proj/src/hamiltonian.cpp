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

#include "betheprep/hamiltonian.hpp"

#include <cmath>

namespace betheprep {

namespace {

// On an anti-aligned pair, sigma^x sigma^x + sigma^y sigma^y swaps the two
// spins with amplitude 2 and sigma^z sigma^z - 1 gives -2; aligned pairs are
// annihilated by both. Scaled by -1/2 this is a hop of -1 and a diagonal
// of +delta.
OperatorMatrix::Bond xxz_bond(int L, int site, int next_site, double delta) {
    return {position_to_wire(L, site), position_to_wire(L, next_site), -1.0,
            delta};
}

void require_chain(int L) {
    if (L < 2) {
        throw DomainError("XXZ chain needs L >= 2, got " + std::to_string(L));
    }
    if (L > BitString::kMaxLength) {
        throw DomainError("chain too long");
    }
}

} // namespace

OperatorMatrix::OperatorMatrix(int L, std::vector<Bond> bonds,
                               std::vector<Field> fields, double constant)
    : L_(L), bonds_(std::move(bonds)), fields_(std::move(fields)),
      constant_(constant) {
    const auto check = [L](int w) {
        if (w < 0 || w >= L) {
            throw DomainError("operator term on wire " + std::to_string(w) +
                              " outside [0, " + std::to_string(L) + ")");
        }
    };
    for (const Bond &b : bonds_) {
        check(b.wire_a);
        check(b.wire_b);
        if (b.wire_a == b.wire_b) {
            throw DomainError("bond joins a wire to itself");
        }
    }
    for (const Field &f : fields_) {
        check(f.wire);
    }
}

double OperatorMatrix::diagonal(std::uint64_t index) const {
    double d = constant_;
    for (const Bond &b : bonds_) {
        if (((index >> b.wire_a) & 1U) != ((index >> b.wire_b) & 1U)) {
            d += b.anti_aligned;
        }
    }
    for (const Field &f : fields_) {
        if (((index >> f.wire) & 1U) != 0U) {
            d += f.when_one;
        }
    }
    return d;
}

void OperatorMatrix::apply(std::span<const Complex> in,
                           std::span<Complex> out) const {
    const std::size_t dim = std::size_t{1} << L_;
    if (in.size() != dim || out.size() != dim) {
        throw DomainError("operator applied to a vector of the wrong size");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = diagonal(i) * in[i];
    }
    for (const Bond &b : bonds_) {
        if (b.hop == 0.0) {
            continue;
        }
        const std::uint64_t flip =
            (std::uint64_t{1} << b.wire_a) | (std::uint64_t{1} << b.wire_b);
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (((i >> b.wire_a) & 1U) != ((i >> b.wire_b) & 1U)) {
                out[i ^ flip] += b.hop * in[i];
            }
        }
    }
}

StateVector OperatorMatrix::apply(const StateVector &state) const {
    if (state.n_wires() != L_) {
        throw DomainError("operator and state have different wire counts");
    }
    std::vector<Complex> out(state.size());
    apply(state.amps(), out);
    return {L_, std::move(out)};
}

std::vector<double> OperatorMatrix::dense() const {
    if (L_ > kMaxDenseWires) {
        throw ResourceError("dense materialization is limited to " +
                            std::to_string(kMaxDenseWires) + " wires");
    }
    const std::size_t dim = std::size_t{1} << L_;
    std::vector<double> m(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        m[i * dim + i] = diagonal(i);
    }
    for (const Bond &b : bonds_) {
        const std::uint64_t flip =
            (std::uint64_t{1} << b.wire_a) | (std::uint64_t{1} << b.wire_b);
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (((i >> b.wire_a) & 1U) != ((i >> b.wire_b) & 1U)) {
                m[(i ^ flip) * dim + i] += b.hop;
            }
        }
    }
    return m;
}

OperatorMatrix build_closed(int L, double delta) {
    require_chain(L);
    std::vector<OperatorMatrix::Bond> bonds;
    for (int n = 1; n <= L; ++n) {
        bonds.push_back(xxz_bond(L, n, n % L + 1, delta));
    }
    return {L, std::move(bonds), {}, 0.0};
}

OperatorMatrix build_open(int L, double delta, double h, double h_prime) {
    require_chain(L);
    std::vector<OperatorMatrix::Bond> bonds;
    for (int n = 1; n < L; ++n) {
        bonds.push_back(xxz_bond(L, n, n + 1, delta));
    }
    // -1/2 h sigma^z_1 + 1/2 h is 0 on a 0 and h on a 1; same for h' at L.
    std::vector<OperatorMatrix::Field> fields{
        {position_to_wire(L, 1), h}, {position_to_wire(L, L), h_prime}};
    return {L, std::move(bonds), std::move(fields), 0.0};
}

OperatorMatrix sz(int L) {
    if (L < 1 || L > BitString::kMaxLength) {
        throw DomainError("S^z needs 1 <= L <= 63");
    }
    std::vector<OperatorMatrix::Field> fields;
    for (int w = 0; w < L; ++w) {
        fields.push_back({w, -1.0});
    }
    return {L, {}, std::move(fields), 0.5 * L};
}

double eigen_residual(const OperatorMatrix &H, const StateVector &state,
                      double E) {
    const StateVector h_psi = H.apply(state);
    double sum = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        sum += std::norm(h_psi[i] - E * state[i]);
    }
    return std::sqrt(sum);
}

Complex expectation(const OperatorMatrix &H, const StateVector &state) {
    return overlap(state, H.apply(state));
}

} // namespace betheprep
