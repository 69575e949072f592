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
 * Coordinate Bethe-ansatz amplitudes for the XXZ chain, amplitude tables,
 * and the tail norms F(b) / branch ratios G(ib) consumed by synthesis.
 */

#pragma once

#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "betheprep/bitstring.hpp"
#include "betheprep/errors.hpp"

namespace betheprep {

enum class Boundary { Closed, Open };

struct ChainSpec {
    Boundary boundary = Boundary::Closed;
    double delta = 1.0;
    /// Boundary fields; only meaningful for open chains.
    double h = 0.0;
    double h_prime = 0.0;
};

struct BetheRoots {
    std::vector<Complex> k;

    [[nodiscard]] int size() const noexcept {
        return static_cast<int>(k.size());
    }
};

/// s(k, k') = 1 - 2 delta e^{ik'} + e^{i(k+k')}.
Complex s_fn(Complex k, Complex k_prime, double delta);

/// B(k, k') = s(k, k') s(k', -k), the open-chain two-body factor.
Complex open_B(Complex k, Complex k_prime, double delta);
/// alpha(k) = 1 + (h - delta) e^{-ik}.
Complex open_alpha(Complex k, double delta, double h);
/// beta(k) = [1 + (h' - delta) e^{-ik}] e^{i(L+1)k}.
Complex open_beta(Complex k, double delta, double h_prime, int L);

/// Closed-chain coefficient f(w): signed sum over all root permutations.
Complex amplitude_closed(const BitString &w, const BetheRoots &roots,
                         double delta);

/// Open-chain coefficient f(w): signed sum over permutations and sign flips.
/// The chain length is taken from w.
Complex amplitude_open(const BitString &w, const BetheRoots &roots,
                       double delta, double h, double h_prime);

namespace source {
struct Closed {
    ChainSpec chain;
    BetheRoots roots;
};
struct Open {
    ChainSpec chain;
    BetheRoots roots;
};
struct Dicke {};
struct Custom {
    std::unordered_map<BitString, Complex> amplitudes;
};
} // namespace source

using TableSource =
    std::variant<source::Closed, source::Open, source::Dicke, source::Custom>;

/// Complete coefficient map over P(L, M).
///
/// Entries are stored in enumerate(L, M) order. Tables are immutable once
/// built and never all-zero.
class AmplitudeTable {
  public:
    AmplitudeTable(int L, int M, TableSource source);

    [[nodiscard]] int L() const noexcept { return L_; }
    [[nodiscard]] int M() const noexcept { return M_; }
    [[nodiscard]] const TableSource &source() const noexcept {
        return source_;
    }
    [[nodiscard]] const std::vector<BitString> &words() const noexcept {
        return words_;
    }
    [[nodiscard]] const std::vector<Complex> &values() const noexcept {
        return values_;
    }

    /// f(w); throws DomainError when w is not in P(L, M).
    [[nodiscard]] Complex at(const BitString &w) const;

    [[nodiscard]] double max_abs() const noexcept { return max_abs_; }

  private:
    int L_;
    int M_;
    TableSource source_;
    std::vector<BitString> words_;
    std::vector<Complex> values_;
    std::unordered_map<BitString, std::size_t> index_;
    double max_abs_ = 0.0;
};

/// Builds the table for the given source. Bethe sources need 0 < M < L and
/// |roots| = M; custom sources must cover all of P(L, M).
AmplitudeTable build_table(int L, int M, TableSource source);

/// Whether suffix b can still be completed to a word of P(L, M).
bool is_feasible_suffix(int L, int M, const BitString &b);

/// Number of prefixes a with ab in P(L, M).
std::uint64_t extension_count(int L, int M, const BitString &b);

/// F(b) computed directly from the table by summing over all extensions.
/// Infeasible suffixes give 0.
Complex tail_F(const AmplitudeTable &table, const BitString &b);

/// Memoized F(b) over every feasible suffix, with the G(ib) ratios.
class TailStatistics {
  public:
    explicit TailStatistics(const AmplitudeTable &table);

    [[nodiscard]] Complex F(const BitString &b) const;

    /// F(ib)/F(b), or nullopt when F(b) is zero (SINGULAR).
    [[nodiscard]] std::optional<Complex> G(int i, const BitString &b) const;

    [[nodiscard]] bool is_zero(Complex value) const noexcept {
        return std::abs(value) <= zero_threshold_;
    }
    [[nodiscard]] double zero_threshold() const noexcept {
        return zero_threshold_;
    }
    [[nodiscard]] int L() const noexcept { return L_; }
    [[nodiscard]] int M() const noexcept { return M_; }

  private:
    int L_;
    int M_;
    double zero_threshold_;
    std::unordered_map<BitString, Complex> F_;
};

inline std::optional<Complex> ratio_G(const TailStatistics &stats, int i,
                                      const BitString &b) {
    return stats.G(i, b);
}

/// Relative scale below which |F(b)| counts as an exact zero.
inline constexpr double kZeroRelativeThreshold = 1e-14;

} // namespace betheprep
