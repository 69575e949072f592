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

#include <set>
#include <unordered_set>

#include <gtest/gtest.h>

#include "betheprep/bitstring.hpp"
#include "betheprep/errors.hpp"

using namespace betheprep;

namespace {

std::vector<std::string> strs(const std::vector<BitString> &words) {
    std::vector<std::string> out;
    for (const auto &w : words) {
        out.push_back(w.str());
    }
    return out;
}

} // namespace

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(strs(enumerate(2, 1)), (std::vector<std::string>{"01", "10"}));
    EXPECT_EQ(strs(enumerate(4, 2)),
              (std::vector<std::string>{"0011", "0101", "0110", "1001", "1010",
                                        "1100"}));
    EXPECT_EQ(strs(enumerate(5, 0)), (std::vector<std::string>{"00000"}));
    EXPECT_EQ(strs(enumerate(3, 3)), (std::vector<std::string>{"111"}));
    EXPECT_EQ(strs(enumerate(0, 0)), (std::vector<std::string>{""}));
}

TEST(Enumerate, RejectsBadWeights) {
    EXPECT_THROW(enumerate(3, 4), DomainError);
    EXPECT_THROW(enumerate(-1, 0), DomainError);
    EXPECT_THROW(enumerate(3, -1), DomainError);
}

TEST(Enumerate, CountsWeightsAndOrderUpToTen) {
    for (int L = 0; L <= 10; ++L) {
        for (int M = 0; M <= L; ++M) {
            const auto words = enumerate(L, M);
            ASSERT_EQ(words.size(), binomial(L, M)) << L << "," << M;
            for (std::size_t i = 0; i < words.size(); ++i) {
                EXPECT_EQ(words[i].weight(), M);
                EXPECT_EQ(words[i].length(), L);
                if (i > 0) {
                    EXPECT_LT(basis_index(words[i - 1]), basis_index(words[i]));
                }
            }
        }
    }
}

TEST(OnesPositions, ReadsFromTheLeft) {
    EXPECT_EQ(ones_positions(BitString::parse("0101")),
              (std::vector<int>{2, 4}));
    EXPECT_TRUE(ones_positions(BitString::parse("0000")).empty());
    EXPECT_EQ(ones_positions(BitString::parse("1100")),
              (std::vector<int>{1, 2}));
}

TEST(BasisIndex, BigEndian) {
    EXPECT_EQ(basis_index(BitString::parse("110")), 6U);
    EXPECT_EQ(basis_index(BitString::parse("0001")), 1U);
    EXPECT_EQ(basis_index(BitString::parse("1010")), 10U);
    // Wire 0 is the rightmost character.
    const BitString w = BitString::parse("110");
    EXPECT_EQ(w.at(wire_to_position(3, 0)), 0);
    EXPECT_EQ(w.at(wire_to_position(3, 1)), 1);
    EXPECT_EQ(w.at(wire_to_position(3, 2)), 1);
}

TEST(BasisIndex, BijectionUpToTen) {
    for (int L = 0; L <= 10; ++L) {
        std::set<std::uint64_t> seen;
        for (int M = 0; M <= L; ++M) {
            for (const auto &w : enumerate(L, M)) {
                const auto idx = basis_index(w);
                EXPECT_LT(idx, std::uint64_t{1} << L);
                EXPECT_TRUE(seen.insert(idx).second);
                EXPECT_EQ(BitString::parse(w.str()), w);
            }
        }
        EXPECT_EQ(seen.size(), std::size_t{1} << L);
    }
}

TEST(Concat, Examples) {
    EXPECT_EQ(concat(BitString::parse("0"), BitString::parse("011")).str(),
              "0011");
    const BitString w = BitString::parse("0110");
    EXPECT_EQ(concat(BitString{}, w), w);
    EXPECT_EQ(concat(BitString::parse("1"), BitString::parse("0")).str(), "10");
}

TEST(Concat, IndexAndWeightAreAdditive) {
    for (int la = 0; la <= 4; ++la) {
        for (int lb = 0; lb <= 4; ++lb) {
            for (std::uint64_t a = 0; a < (1U << la); ++a) {
                for (std::uint64_t b = 0; b < (1U << lb); ++b) {
                    const BitString wa(a, la);
                    const BitString wb(b, lb);
                    const BitString ab = concat(wa, wb);
                    EXPECT_EQ(basis_index(ab),
                              basis_index(wa) * (1U << lb) + basis_index(wb));
                    EXPECT_EQ(ab.weight(), wa.weight() + wb.weight());
                    EXPECT_EQ(ab.str(), wa.str() + wb.str());
                }
            }
        }
    }
}

TEST(BitStringValue, EqualityDistinguishesLength) {
    EXPECT_NE(BitString::parse("01"), BitString::parse("1"));
    std::unordered_set<BitString> set{BitString::parse("01"),
                                      BitString::parse("1"), BitString{}};
    EXPECT_EQ(set.size(), 3U);
    EXPECT_EQ(BitString::parse("{}"), BitString{});
}

TEST(BitStringValue, RejectsBadText) {
    EXPECT_THROW(BitString::parse("01a"), DomainError);
    EXPECT_THROW(BitString(4, 2), DomainError);
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(4, 2), 6U);
    EXPECT_EQ(binomial(6, 3), 20U);
    EXPECT_EQ(binomial(3, 5), 0U);
    EXPECT_EQ(binomial(0, 0), 1U);
}
