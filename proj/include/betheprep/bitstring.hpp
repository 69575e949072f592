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
 * Fixed-weight binary words and the basis-index convention.
 *
 * A word is read left to right; position p (1-based) of a length-L word
 * lives on wire L - p, so wire 0 is the rightmost character and the basis
 * index of a word is its value as a big-endian binary numeral. Every other
 * module goes through the helpers here for that conversion.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace betheprep {

class BitString {
  public:
    static constexpr int kMaxLength = 63;

    constexpr BitString() = default;

    /// Word of `length` characters whose big-endian value is `value`.
    /// Throws DomainError if the value does not fit.
    BitString(std::uint64_t value, int length);

    /// Parses ASCII '0'/'1' text. "{}" and "" both denote the empty word.
    static BitString parse(std::string_view text);

    [[nodiscard]] constexpr int length() const noexcept { return length_; }
    [[nodiscard]] constexpr bool empty() const noexcept { return length_ == 0; }
    [[nodiscard]] constexpr std::uint64_t value() const noexcept {
        return value_;
    }

    /// Character at 1-based position from the left, as 0 or 1.
    [[nodiscard]] int at(int position) const;

    [[nodiscard]] int weight() const noexcept;

    [[nodiscard]] std::string str() const;

    friend constexpr bool operator==(const BitString &,
                                     const BitString &) = default;
    friend constexpr auto operator<=>(const BitString &,
                                      const BitString &) = default;

  private:
    std::uint64_t value_ = 0;
    int length_ = 0;
};

/// All words of length L with exactly M ones, by increasing basis index.
std::vector<BitString> enumerate(int L, int M);

/// 1-based positions of the ones, increasing.
std::vector<int> ones_positions(const BitString &w);

/// Big-endian value of w; for length-L words this is the statevector index.
inline std::uint64_t basis_index(const BitString &w) { return w.value(); }

BitString concat(const BitString &a, const BitString &b);

/// Wire carrying string position `position` (1-based) of a length-L word.
constexpr int position_to_wire(int L, int position) { return L - position; }
constexpr int wire_to_position(int L, int wire) { return L - wire; }

/// Exact binomial coefficient; zero outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

} // namespace betheprep

template <> struct std::hash<betheprep::BitString> {
    std::size_t operator()(const betheprep::BitString &w) const noexcept {
        return std::hash<std::uint64_t>{}(
            w.value() ^ (static_cast<std::uint64_t>(w.length()) << 58U));
    }
};
