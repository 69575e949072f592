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

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "betheprep/bethe.hpp"
#include "betheprep/hamiltonian.hpp"
#include "oracles.hpp"

using namespace betheprep;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int L, std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    std::vector<Complex> amps(std::size_t{1} << L);
    for (auto &a : amps) {
        a = {n(rng), n(rng)};
    }
    return {L, std::move(amps)};
}

double max_dense_diff(const OperatorMatrix &H, const Eigen::MatrixXcd &ref) {
    const std::vector<double> d = H.dense();
    const auto dim = static_cast<std::size_t>(ref.rows());
    double diff = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            diff = std::max(diff, std::abs(d[r * dim + c] -
                                           ref(static_cast<Eigen::Index>(r),
                                               static_cast<Eigen::Index>(c))));
        }
    }
    return diff;
}

StateVector prepared(const AmplitudeTable &table) {
    return run(zero_state(table.L()), build_full(table));
}

} // namespace

TEST(Hamiltonian, MatchesKroneckerConstruction) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int L = 2; L <= 7; ++L) {
        const double delta = u(rng);
        const double h = u(rng);
        const double hp = u(rng);
        EXPECT_LT(max_dense_diff(build_closed(L, delta),
                                 oracle::pauli_chain(L, delta, true, 0, 0)),
                  1e-12)
            << L;
        EXPECT_LT(max_dense_diff(build_open(L, delta, h, hp),
                                 oracle::pauli_chain(L, delta, false, h, hp)),
                  1e-12)
            << L;
    }
}

TEST(Hamiltonian, FerromagneticStatesAreAnnihilated) {
    const OperatorMatrix H = build_closed(2, 0.37);
    for (const std::uint64_t idx : {0U, 3U}) {
        StateVector s(2, std::vector<Complex>(4));
        s[idx] = 1.0;
        EXPECT_LT(H.apply(s).norm(), 1e-15);
    }
    const StateVector vacuum = zero_state(5);
    EXPECT_LT(eigen_residual(build_open(5, 0.3, 0.8, -0.2), vacuum, 0.0), 1e-15);
}

TEST(Hamiltonian, ApplyMatchesDenseAndIsHermitian) {
    std::mt19937_64 rng(43);
    const OperatorMatrix H = build_open(6, 0.9, 0.25, -0.6);
    const std::vector<double> d = H.dense();
    const std::size_t dim = 64;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            EXPECT_EQ(d[r * dim + c], d[c * dim + r]);
        }
    }
    const StateVector a = random_state(6, rng);
    const StateVector b = random_state(6, rng);
    const StateVector ha = H.apply(a);
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            acc += d[r * dim + c] * a[c];
        }
        EXPECT_LT(std::abs(acc - ha[r]), 1e-12);
    }
    EXPECT_LT(std::abs(overlap(b, ha) - overlap(H.apply(b), a)), 1e-10);
}

TEST(Hamiltonian, CommutesWithSzAndKeepsWeight) {
    std::mt19937_64 rng(47);
    for (int L = 2; L <= 8; ++L) {
        const OperatorMatrix H =
            (L % 2 == 0) ? build_closed(L, 1.3) : build_open(L, 0.4, 0.2, 1.1);
        const OperatorMatrix S = sz(L);
        const StateVector v = random_state(L, rng);
        const StateVector a = H.apply(S.apply(v));
        const StateVector b = S.apply(H.apply(v));
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_LT(std::abs(a[i] - b[i]), 1e-10);
        }
        for (std::size_t col = 0; col < (std::size_t{1} << L); ++col) {
            StateVector e(L, std::vector<Complex>(std::size_t{1} << L));
            e[col] = 1.0;
            const StateVector he = H.apply(e);
            for (std::size_t r = 0; r < he.size(); ++r) {
                if (he[r] != Complex(0.0)) {
                    EXPECT_EQ(std::popcount(r), std::popcount(col));
                }
            }
        }
    }
}

TEST(Sz, Examples) {
    EXPECT_NEAR(expectation(sz(4), target_state(instances::open_table())).real(),
                0.0, 1e-15);
    EXPECT_NEAR(expectation(sz(3), zero_state(3)).real(), 1.5, 1e-15);
    StateVector one(3, std::vector<Complex>(8));
    one[4] = 1.0;
    EXPECT_NEAR(expectation(sz(3), one).real(), 0.5, 1e-15);
    EXPECT_LT(eigen_residual(sz(3), one, 0.5), 1e-15);
}

TEST(EigenResidual, Examples) {
    std::mt19937_64 rng(53);
    const OperatorMatrix H = build_closed(4, 0.5);
    EXPECT_GT(eigen_residual(H, random_state(4, rng), 0.0), 0.1);
    EXPECT_THROW(build_closed(1, 0.5), DomainError);
    EXPECT_THROW(build_open(1, 0.5, 0, 0), DomainError);
    EXPECT_THROW(eigen_residual(H, zero_state(3), 0.0), DomainError);
}

TEST(Spectrum, OpenInstanceEnergy) {
    const auto H = oracle::pauli_chain(instances::kOpenL, instances::kOpenDelta,
                                       false, instances::kOpenH,
                                       instances::kOpenHPrime);
    const double E = energy({instances::kOpenRoots}, instances::kOpenDelta).real();
    EXPECT_LT(oracle::distance_to_spectrum(oracle::spectrum(H), E), 1e-4);
    const OperatorMatrix op =
        build_open(instances::kOpenL, instances::kOpenDelta, instances::kOpenH,
                   instances::kOpenHPrime);
    EXPECT_LT(eigen_residual(op, prepared(instances::open_table()), E), 1e-4);
}

TEST(Spectrum, ClosedInstanceEnergy) {
    const auto H = oracle::pauli_chain(instances::kClosedL,
                                       instances::kClosedDelta, true, 0, 0);
    const auto spec = oracle::spectrum(H);
    const double six_digit =
        energy({instances::kClosedRoots}, instances::kClosedDelta).real();
    EXPECT_LT(oracle::distance_to_spectrum(spec, six_digit), 1e-4);
    const double refined =
        energy({instances::kClosedRootsRefined}, instances::kClosedDelta).real();
    EXPECT_LT(oracle::distance_to_spectrum(spec, refined), 1e-10);
    const OperatorMatrix op =
        build_closed(instances::kClosedL, instances::kClosedDelta);
    const StateVector psi =
        prepared(instances::closed_table(instances::kClosedRootsRefined));
    EXPECT_LT(eigen_residual(op, psi, refined), 1e-10);
    EXPECT_NEAR(expectation(op, psi).real(), refined, 1e-10);
}

TEST(Spectrum, SingleMagnonPlaneWavesAreEigenstates) {
    const int L = 6;
    const double delta = 0.45;
    for (int n = 0; n < L; ++n) {
        const Complex k = 2.0 * kPi * n / L;
        const auto table = build_table(
            L, 1, source::Closed{{Boundary::Closed, delta}, {{k}}});
        const double E = energy({{k}}, delta).real();
        EXPECT_LT(eigen_residual(build_closed(L, delta), prepared(table), E),
                  1e-12);
    }
}

TEST(Spectrum, IsotropicRaisingOperatorAnnihilatesBetheState) {
    // At delta = 1 a Bethe state with finite momenta is a highest-weight
    // state, so the total raising operator (flip a 1 to 0) kills it.
    const int L = 5;
    const Complex k = 2.0 * kPi * 2 / L;
    const auto table =
        build_table(L, 1, source::Closed{{Boundary::Closed, 1.0}, {{k}}});
    const StateVector psi = prepared(table);
    StateVector raised(L, std::vector<Complex>(std::size_t{1} << L));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (int w = 0; w < L; ++w) {
            if ((i >> w) & 1U) {
                raised[i & ~(std::size_t{1} << w)] += psi[i];
            }
        }
    }
    EXPECT_LT(raised.norm(), 1e-12);
}
