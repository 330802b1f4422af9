// Copyright 2026 The gsswb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "gsswb/common/bitvec.hpp"
#include "gsswb/common/parallel.hpp"
#include "gsswb/common/rational.hpp"
#include "gsswb/common/rng.hpp"

using namespace gsswb;

TEST(rational, normalizes_and_orders) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_EQ(Rational(0, 5).to_string(), "0/1");
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(rational, parse_round_trip) {
    EXPECT_EQ(Rational::parse("2/3"), Rational(2, 3));
    EXPECT_EQ(Rational::parse("4"), Rational(4));
    EXPECT_EQ(Rational::parse(Rational(7, 9).to_string()), Rational(7, 9));
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(rng, derive_seed_separates_stages_and_indices) {
    std::set<uint64_t> seen;
    for (const char *stage : {"a", "b", "graph", "trial"}) {
        for (uint64_t i = 0; i < 50; i++) {
            seen.insert(derive_seed(42, stage, i));
        }
    }
    EXPECT_EQ(seen.size(), 200u);
    EXPECT_EQ(derive_seed(1, "x", 2), derive_seed(1, "x", 2));
}

TEST(rng, below_is_in_range_and_roughly_uniform) {
    Rng rng(3);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; i++) {
        uint64_t v = rng.below(7);
        ASSERT_LT(v, 7u);
        counts[v]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 500);
    }
    EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(rng, fixed_seed_stream_is_stable) {
    // std::mt19937_64 is fully specified, so the 10000th output is fixed.
    std::mt19937_64 reference(5489);
    reference.discard(9999);
    EXPECT_EQ(reference(), 9981545732273789042ULL);
    Rng a(99), b(99);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(a.below(1000), b.below(1000));
    }
}

TEST(bitvec, string_round_trip_and_ops) {
    auto v = BitVec::from_string("1011001");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.to_string(), "1011001");
    EXPECT_EQ(v.popcount(), 4u);
    EXPECT_EQ(v.first_set(), 0u);
    auto w = BitVec::from_string("0011000");
    EXPECT_EQ((v ^ w).to_string(), "1000001");
    EXPECT_FALSE(v.dot(w));
    EXPECT_TRUE(v.dot(BitVec::from_string("0010000")));
    EXPECT_EQ(v.set_bits(), (std::vector<size_t>{0, 2, 3, 6}));
    EXPECT_THROW(BitVec::from_string("10x"), std::invalid_argument);
    EXPECT_THROW(v ^= BitVec(3), std::invalid_argument);
}

TEST(bitvec, long_vectors) {
    BitVec a(200), b(200);
    a.set(3);
    a.set(150);
    b.set(150);
    b.set(199);
    EXPECT_TRUE(a.dot(b));
    a ^= b;
    EXPECT_EQ(a.set_bits(), (std::vector<size_t>{3, 199}));
    EXPECT_EQ(BitVec(130).first_set(), 130u);
}

TEST(parallel, results_are_independent_of_thread_count) {
    std::vector<uint64_t> one(100), many(100);
    parallel_for(100, 1, [&](size_t i) { one[i] = derive_seed(1, "p", i); });
    parallel_for(100, 4, [&](size_t i) { many[i] = derive_seed(1, "p", i); });
    EXPECT_EQ(one, many);
    EXPECT_THROW(parallel_for(10, 3,
                              [](size_t i) {
                                  if (i == 5) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}
