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

#include "betheprep/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace betheprep {

namespace {

constexpr Complex kI{0.0, 1.0};

void note_coincident_roots(const BetheRoots &roots, ResidualReport &report) {
    for (std::size_t j = 0; j < roots.k.size(); ++j) {
        for (std::size_t l = j + 1; l < roots.k.size(); ++l) {
            if (roots.k[j] == roots.k[l]) {
                report.warnings.push_back(
                    "roots " + std::to_string(j) + " and " +
                    std::to_string(l) + " coincide");
            }
        }
    }
}

/// Fills per-root entries from `lhs` and `rhs_factor`, tracking zero
/// denominators. `rhs_factor(j, l)` returns {numerator, denominator}.
template <class Lhs, class Factor>
ResidualReport residuals(const BetheRoots &roots, Lhs &&lhs,
                         Factor &&rhs_factor) {
    ResidualReport report;
    note_coincident_roots(roots, report);
    const std::size_t m = roots.k.size();
    report.per_root.resize(m);
    report.singular.assign(m, false);
    for (std::size_t j = 0; j < m; ++j) {
        const auto [lhs_num, lhs_den] = lhs(j);
        bool singular = lhs_den == Complex{0.0, 0.0};
        Complex rhs{1.0, 0.0};
        for (std::size_t l = 0; l < m && !singular; ++l) {
            if (l == j) {
                continue;
            }
            const auto [num, den] = rhs_factor(j, l);
            if (den == Complex{0.0, 0.0}) {
                singular = true;
            } else {
                rhs *= num / den;
            }
        }
        if (singular) {
            report.singular[j] = true;
            report.per_root[j] = {std::numeric_limits<double>::infinity(), 0.0};
            report.warnings.push_back("equation " + std::to_string(j) +
                                      " divides by zero");
        } else {
            report.per_root[j] = lhs_num / lhs_den - rhs;
        }
        report.max_abs = std::max(report.max_abs, std::abs(report.per_root[j]));
    }
    return report;
}

} // namespace

ResidualReport closed_residuals(const BetheRoots &roots, double delta, int L) {
    const auto &k = roots.k;
    return residuals(
        roots,
        [&](std::size_t j) {
            return std::pair{std::exp(kI * k[j] * static_cast<double>(L)),
                             Complex{1.0, 0.0}};
        },
        [&](std::size_t j, std::size_t l) {
            return std::pair{-s_fn(k[l], k[j], delta), s_fn(k[j], k[l], delta)};
        });
}

ResidualReport open_residuals(const BetheRoots &roots, double delta, double h,
                              double h_prime, int L) {
    const auto &k = roots.k;
    return residuals(
        roots,
        [&](std::size_t j) {
            return std::pair{open_alpha(k[j], delta, h) *
                                 open_beta(k[j], delta, h_prime, L),
                             open_alpha(-k[j], delta, h) *
                                 open_beta(-k[j], delta, h_prime, L)};
        },
        [&](std::size_t j, std::size_t l) {
            return std::pair{open_B(-k[j], k[l], delta),
                             open_B(k[j], k[l], delta)};
        });
}

ResidualReport bethe_residuals(const ChainSpec &chain, const BetheRoots &roots,
                               int L) {
    if (chain.boundary == Boundary::Open) {
        return open_residuals(roots, chain.delta, chain.h, chain.h_prime, L);
    }
    return closed_residuals(roots, chain.delta, L);
}

EnergyReport energy(const BetheRoots &roots, double delta) {
    Complex e{0.0, 0.0};
    for (const Complex &k : roots.k) {
        e += 2.0 * (delta - std::cos(k));
    }
    const bool is_real = std::abs(e.imag()) <= kEnergyImagTolerance;
    if (is_real) {
        e.imag(0.0);
    }
    return {e, is_real};
}

} // namespace betheprep
