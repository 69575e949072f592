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

#include "betheprep/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <utility>

namespace betheprep {

namespace {

constexpr Complex kI{0.0, 1.0};

// f(w) this far below the size of its individual terms is pure rounding.
constexpr double kDegenerateCancellation = 1e-10;

Complex pairwise_sum(std::span<const Complex> terms) {
    if (terms.size() <= 8) {
        Complex acc{0.0, 0.0};
        for (const Complex &t : terms) {
            acc += t;
        }
        return acc;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

/// One term of the coordinate-ansatz sum: a signed prefactor and the
/// momenta assigned, in order, to the particle positions x_1 < ... < x_M.
struct AnsatzTerm {
    Complex weight;
    std::vector<Complex> momenta;
};

/// Visits every permutation of `items` with its parity (+1/-1), using
/// Heap's algorithm so that consecutive permutations differ by one swap.
template <class Visit>
void for_each_signed_permutation(std::vector<Complex> items, Visit &&visit) {
    const std::size_t n = items.size();
    std::vector<std::size_t> c(n, 0);
    int sign = 1;
    visit(std::as_const(items), sign);
    std::size_t i = 1;
    while (i < n) {
        if (c[i] < i) {
            if (i % 2 == 0) {
                std::swap(items[0], items[i]);
            } else {
                std::swap(items[c[i]], items[i]);
            }
            sign = -sign;
            visit(std::as_const(items), sign);
            ++c[i];
            i = 1;
        } else {
            c[i] = 0;
            ++i;
        }
    }
}

std::vector<AnsatzTerm> closed_terms(const BetheRoots &roots, double delta) {
    std::vector<AnsatzTerm> terms;
    for_each_signed_permutation(
        roots.k, [&](const std::vector<Complex> &q, int sign) {
            Complex a{1.0, 0.0};
            for (std::size_t j = 0; j < q.size(); ++j) {
                for (std::size_t l = j + 1; l < q.size(); ++l) {
                    a *= s_fn(q[l], q[j], delta);
                }
            }
            terms.push_back({static_cast<double>(sign) * a, q});
        });
    return terms;
}

std::vector<AnsatzTerm> open_terms(const BetheRoots &roots, double delta,
                                   double h_prime, int L) {
    const std::size_t m = roots.k.size();
    std::vector<AnsatzTerm> terms;
    for_each_signed_permutation(
        roots.k, [&](const std::vector<Complex> &perm, int sign) {
            for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << m);
                 ++flips) {
                std::vector<Complex> q(perm);
                int eps = sign;
                for (std::size_t j = 0; j < m; ++j) {
                    if (((flips >> j) & 1U) != 0U) {
                        q[j] = -q[j];
                        eps = -eps;
                    }
                }
                Complex a{1.0, 0.0};
                for (std::size_t j = 0; j < m; ++j) {
                    a *= open_beta(-q[j], delta, h_prime, L);
                }
                for (std::size_t j = 0; j < m; ++j) {
                    for (std::size_t l = j + 1; l < m; ++l) {
                        a *= open_B(-q[j], q[l], delta) * std::exp(-kI * q[l]);
                    }
                }
                terms.push_back({static_cast<double>(eps) * a, std::move(q)});
            }
        });
    return terms;
}

/// Evaluates sum_terms weight * exp(i sum_j q_j x_j) for a set of words,
/// reusing the root-only prefactors across all of them.
class AnsatzKernel {
  public:
    explicit AnsatzKernel(std::vector<AnsatzTerm> terms)
        : terms_(std::move(terms)) {}

    Complex operator()(const BitString &w) const {
        double ignored = 0.0;
        return evaluate(w, ignored);
    }

    /// Also reports sum_t |term_t|, the scale against which cancellation
    /// in the result is judged.
    Complex evaluate(const BitString &w, double &magnitude) const {
        const std::vector<int> x = ones_positions(w);
        std::vector<Complex> parts;
        parts.reserve(terms_.size());
        magnitude = 0.0;
        for (const AnsatzTerm &t : terms_) {
            Complex phase{0.0, 0.0};
            for (std::size_t j = 0; j < x.size(); ++j) {
                phase += t.momenta[j] * static_cast<double>(x[j]);
            }
            parts.push_back(t.weight * std::exp(kI * phase));
            magnitude += std::abs(parts.back());
        }
        return pairwise_sum(parts);
    }

  private:
    std::vector<AnsatzTerm> terms_;
};

void require_weight(const BitString &w, const BetheRoots &roots) {
    if (w.weight() != roots.size()) {
        throw DomainError("word " + w.str() + " has weight " +
                          std::to_string(w.weight()) + " but " +
                          std::to_string(roots.size()) +
                          " Bethe roots were given");
    }
}

} // namespace

Complex s_fn(Complex k, Complex k_prime, double delta) {
    return 1.0 - 2.0 * delta * std::exp(kI * k_prime) +
           std::exp(kI * (k + k_prime));
}

Complex open_B(Complex k, Complex k_prime, double delta) {
    return s_fn(k, k_prime, delta) * s_fn(k_prime, -k, delta);
}

Complex open_alpha(Complex k, double delta, double h) {
    return 1.0 + (h - delta) * std::exp(-kI * k);
}

Complex open_beta(Complex k, double delta, double h_prime, int L) {
    return (1.0 + (h_prime - delta) * std::exp(-kI * k)) *
           std::exp(kI * static_cast<double>(L + 1) * k);
}

Complex amplitude_closed(const BitString &w, const BetheRoots &roots,
                         double delta) {
    require_weight(w, roots);
    return AnsatzKernel(closed_terms(roots, delta))(w);
}

Complex amplitude_open(const BitString &w, const BetheRoots &roots,
                       double delta, double /*h*/, double h_prime) {
    // h enters only through the Bethe equations, not through f(w).
    require_weight(w, roots);
    return AnsatzKernel(open_terms(roots, delta, h_prime, w.length()))(w);
}

AmplitudeTable::AmplitudeTable(int L, int M, TableSource source)
    : L_(L), M_(M), source_(std::move(source)), words_(enumerate(L, M)) {
    values_.reserve(words_.size());
    index_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        index_.emplace(words_[i], i);
    }

    auto fill = [&](auto &&f) {
        for (const BitString &w : words_) {
            values_.push_back(f(w));
        }
    };

    std::visit(
        [&](const auto &src) {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, source::Closed> ||
                          std::is_same_v<T, source::Open>) {
                constexpr bool open = std::is_same_v<T, source::Open>;
                if (src.chain.boundary !=
                    (open ? Boundary::Open : Boundary::Closed)) {
                    throw DomainError("chain boundary does not match source");
                }
                if (M <= 0 || M >= L) {
                    throw DomainError("Bethe sources need 0 < M < L, got L=" +
                                      std::to_string(L) +
                                      " M=" + std::to_string(M));
                }
                if (src.roots.size() != M) {
                    throw DomainError("expected " + std::to_string(M) +
                                      " Bethe roots, got " +
                                      std::to_string(src.roots.size()));
                }
                const AnsatzKernel kernel(
                    open ? open_terms(src.roots, src.chain.delta,
                                      src.chain.h_prime, L)
                         : closed_terms(src.roots, src.chain.delta));
                double scale = 0.0;
                fill([&](const BitString &w) {
                    double magnitude = 0.0;
                    const Complex f = kernel.evaluate(w, magnitude);
                    scale = std::max(scale, magnitude);
                    return f;
                });
                double largest = 0.0;
                for (const Complex &v : values_) {
                    largest = std::max(largest, std::abs(v));
                }
                if (largest <= kDegenerateCancellation * scale) {
                    throw DomainError(
                        "Bethe amplitudes cancel identically (degenerate "
                        "roots); the target state is undefined");
                }
            } else if constexpr (std::is_same_v<T, source::Dicke>) {
                fill([](const BitString &) { return Complex{1.0, 0.0}; });
            } else {
                for (const auto &[w, value] : src.amplitudes) {
                    if (!index_.contains(w)) {
                        throw DomainError("custom amplitude for '" + w.str() +
                                          "' is not a word of P(" +
                                          std::to_string(L) + "," +
                                          std::to_string(M) + ")");
                    }
                }
                fill([&](const BitString &w) {
                    const auto it = src.amplitudes.find(w);
                    if (it == src.amplitudes.end()) {
                        throw DomainError("custom table is missing word " +
                                          w.str());
                    }
                    return it->second;
                });
            }
        },
        source_);

    for (const Complex &v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("amplitude table contains non-finite values");
        }
        max_abs_ = std::max(max_abs_, std::abs(v));
    }
    if (max_abs_ == 0.0) {
        throw DomainError("amplitude table is identically zero; the target "
                          "state is undefined");
    }
}

Complex AmplitudeTable::at(const BitString &w) const {
    const auto it = index_.find(w);
    if (it == index_.end()) {
        throw DomainError("word " + w.str() + " is not in P(" +
                          std::to_string(L_) + "," + std::to_string(M_) + ")");
    }
    return values_[it->second];
}

AmplitudeTable build_table(int L, int M, TableSource source) {
    return {L, M, std::move(source)};
}

bool is_feasible_suffix(int L, int M, const BitString &b) {
    const int free = L - b.length();
    const int missing = M - b.weight();
    return free >= 0 && missing >= 0 && missing <= free;
}

std::uint64_t extension_count(int L, int M, const BitString &b) {
    if (!is_feasible_suffix(L, M, b)) {
        return 0;
    }
    return binomial(L - b.length(), M - b.weight());
}

Complex tail_F(const AmplitudeTable &table, const BitString &b) {
    const int L = table.L();
    const int M = table.M();
    if (!is_feasible_suffix(L, M, b)) {
        return {0.0, 0.0};
    }
    const std::vector<BitString> prefixes =
        enumerate(L - b.length(), M - b.weight());
    if (prefixes.size() == 1) {
        return table.at(concat(prefixes.front(), b));
    }
    double sum = 0.0;
    for (const BitString &a : prefixes) {
        sum += std::norm(table.at(concat(a, b)));
    }
    return {std::sqrt(sum), 0.0};
}

TailStatistics::TailStatistics(const AmplitudeTable &table)
    : L_(table.L()), M_(table.M()),
      zero_threshold_(kZeroRelativeThreshold * table.max_abs()) {
    // Squared tail norms, built from the full words upward so that each
    // level is a sum of two children.
    std::unordered_map<BitString, double> level;
    for (std::size_t i = 0; i < table.words().size(); ++i) {
        level.emplace(table.words()[i], std::norm(table.values()[i]));
    }
    for (std::size_t i = 0; i < table.words().size(); ++i) {
        F_.emplace(table.words()[i], table.values()[i]);
    }
    for (int n = L_ - 1; n >= 0; --n) {
        std::unordered_map<BitString, double> next;
        const int free = L_ - n;
        for (int k = std::max(0, M_ - free); k <= std::min(n, M_); ++k) {
            for (const BitString &b : enumerate(n, k)) {
                double sum = 0.0;
                for (std::uint64_t i = 0; i < 2; ++i) {
                    const BitString child(
                        (i << static_cast<unsigned>(n)) | b.value(), n + 1);
                    if (const auto it = level.find(child); it != level.end()) {
                        sum += it->second;
                    }
                }
                next.emplace(b, sum);
                if (extension_count(L_, M_, b) == 1) {
                    const int missing = M_ - k;
                    const BitString prefix(
                        missing == 0 ? 0U : (std::uint64_t{1} << free) - 1U,
                        free);
                    F_.emplace(b, table.at(concat(prefix, b)));
                } else {
                    F_.emplace(b, Complex{std::sqrt(sum), 0.0});
                }
            }
        }
        level = std::move(next);
    }
}

Complex TailStatistics::F(const BitString &b) const {
    if (b.length() > L_) {
        throw DomainError("suffix longer than the chain");
    }
    const auto it = F_.find(b);
    return it == F_.end() ? Complex{0.0, 0.0} : it->second;
}

std::optional<Complex> TailStatistics::G(int i, const BitString &b) const {
    if (i != 0 && i != 1) {
        throw DomainError("branch index must be 0 or 1");
    }
    if (b.length() >= L_) {
        throw DomainError("G(ib) needs a suffix shorter than the chain");
    }
    const Complex denom = F(b);
    if (is_zero(denom)) {
        return std::nullopt;
    }
    const BitString ib(
        (static_cast<std::uint64_t>(i) << static_cast<unsigned>(b.length())) |
            b.value(),
        b.length() + 1);
    return F(ib) / denom;
}

} // namespace betheprep
