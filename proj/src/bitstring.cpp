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

#include "betheprep/bitstring.hpp"

#include <algorithm>
#include <bit>

#include "betheprep/errors.hpp"

namespace betheprep {

BitString::BitString(std::uint64_t value, int length)
    : value_(value), length_(length) {
    if (length < 0 || length > kMaxLength) {
        throw DomainError("BitString length " + std::to_string(length) +
                          " outside [0, 63]");
    }
    if (length < 64 && (value >> length) != 0U) {
        throw DomainError("BitString value does not fit in " +
                          std::to_string(length) + " characters");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text == "{}") {
        return {};
    }
    if (text.size() > static_cast<std::size_t>(kMaxLength)) {
        throw DomainError("bit string too long: " + std::string(text));
    }
    std::uint64_t value = 0;
    for (const char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("invalid character in bit string '" +
                              std::string(text) + "'");
        }
        value = (value << 1U) | static_cast<std::uint64_t>(c - '0');
    }
    return {value, static_cast<int>(text.size())};
}

int BitString::at(int position) const {
    if (position < 1 || position > length_) {
        throw DomainError("position " + std::to_string(position) +
                          " outside word of length " +
                          std::to_string(length_));
    }
    return static_cast<int>((value_ >> (length_ - position)) & 1U);
}

int BitString::weight() const noexcept { return std::popcount(value_); }

std::string BitString::str() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int p = 1; p <= length_; ++p) {
        if (((value_ >> (length_ - p)) & 1U) != 0U) {
            out[static_cast<std::size_t>(p - 1)] = '1';
        }
    }
    return out;
}

std::vector<BitString> enumerate(int L, int M) {
    if (L < 0 || M < 0 || M > L || L > BitString::kMaxLength) {
        throw DomainError("enumerate requires 0 <= M <= L <= 63, got L=" +
                          std::to_string(L) + " M=" + std::to_string(M));
    }
    std::vector<BitString> out;
    out.reserve(binomial(L, M));
    if (M == 0) {
        out.emplace_back(0U, L);
        return out;
    }
    // Gosper's hack walks same-popcount words in increasing order.
    std::uint64_t w = (std::uint64_t{1} << M) - 1U;
    const std::uint64_t limit = std::uint64_t{1} << L;
    while (w < limit) {
        out.emplace_back(w, L);
        const std::uint64_t c = w & (~w + 1U);
        const std::uint64_t r = w + c;
        w = (((r ^ w) >> 2U) / c) | r;
    }
    return out;
}

std::vector<int> ones_positions(const BitString &w) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w.weight()));
    for (int p = 1; p <= w.length(); ++p) {
        if (w.at(p) == 1) {
            out.push_back(p);
        }
    }
    return out;
}

BitString concat(const BitString &a, const BitString &b) {
    const int length = a.length() + b.length();
    if (length > BitString::kMaxLength) {
        throw DomainError("concatenation exceeds 63 characters");
    }
    return {(a.value() << b.length()) | b.value(), length};
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

} // namespace betheprep
