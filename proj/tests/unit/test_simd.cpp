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

#include <vector>

#include "gsswb/common/rng.hpp"
#include "gsswb/simd/kernels.hpp"

using namespace gsswb;

namespace {

// log_i of the single-qubit product a*b with (x,z) codes, Y = (1,1).
unsigned single_qubit_log_i(bool x1, bool z1, bool x2, bool z2) {
    int a = x1 && z1 ? 2 : x1 ? 1 : z1 ? 3 : 0;  // I=0 X=1 Y=2 Z=3
    int b = x2 && z2 ? 2 : x2 ? 1 : z2 ? 3 : 0;
    if (a == 0 || b == 0 || a == b) {
        return 0;
    }
    // Cyclic X->Y->Z->X multiplies to +i.
    return ((b - a + 3) % 3 == 1) ? 1 : 3;
}

std::vector<uint64_t> random_words(Rng &rng, size_t n) {
    std::vector<uint64_t> out(n);
    for (auto &w : out) {
        w = rng.next();
    }
    return out;
}

std::vector<simd::Level> available_levels() {
    std::vector<simd::Level> out;
    for (auto level : {simd::Level::Scalar, simd::Level::Avx2, simd::Level::Neon}) {
        if (simd::supported(level)) {
            out.push_back(level);
        }
    }
    return out;
}

}  // namespace

TEST(simd, scalar_pauli_mul_matches_per_qubit_table) {
    Rng rng(7);
    const auto &k = simd::kernels_for(simd::Level::Scalar);
    for (size_t words : {1, 2, 3, 5}) {
        for (int trial = 0; trial < 50; trial++) {
            auto x1 = random_words(rng, words);
            auto z1 = random_words(rng, words);
            auto x2 = random_words(rng, words);
            auto z2 = random_words(rng, words);
            unsigned expected = 0;
            for (size_t i = 0; i < words * 64; i++) {
                auto bit = [&](const std::vector<uint64_t> &v) {
                    return ((v[i / 64] >> (i % 64)) & 1) != 0;
                };
                expected += single_qubit_log_i(bit(x1), bit(z1), bit(x2), bit(z2));
            }
            auto ox = x1;
            auto oz = z1;
            unsigned got = k.pauli_mul(ox.data(), oz.data(), x2.data(), z2.data(), words);
            EXPECT_EQ(got, expected & 3);
            for (size_t i = 0; i < words; i++) {
                EXPECT_EQ(ox[i], x1[i] ^ x2[i]);
                EXPECT_EQ(oz[i], z1[i] ^ z2[i]);
            }
        }
    }
}

TEST(simd, every_level_matches_scalar) {
    Rng rng(11);
    const auto &ref = simd::kernels_for(simd::Level::Scalar);
    for (auto level : available_levels()) {
        const auto &k = simd::kernels_for(level);
        SCOPED_TRACE(std::string(simd::level_name(level)));
        for (size_t words : {0, 1, 3, 4, 5, 8, 17, 64, 130, 300}) {
            auto a = random_words(rng, words);
            auto b = random_words(rng, words);
            auto c = random_words(rng, words);
            auto d = random_words(rng, words);

            auto r1 = a;
            auto r2 = a;
            ref.xor_words(r1.data(), b.data(), words);
            k.xor_words(r2.data(), b.data(), words);
            EXPECT_EQ(r1, r2);

            EXPECT_EQ(ref.and_parity(a.data(), b.data(), words), k.and_parity(a.data(), b.data(), words));

            auto ax1 = a, az1 = b, ax2 = a, az2 = b;
            unsigned p1 = ref.pauli_mul(ax1.data(), az1.data(), c.data(), d.data(), words);
            unsigned p2 = k.pauli_mul(ax2.data(), az2.data(), c.data(), d.data(), words);
            EXPECT_EQ(p1, p2);
            EXPECT_EQ(ax1, ax2);
            EXPECT_EQ(az1, az2);

            std::vector<uint32_t> src(words * 2 + 3);
            for (auto &s : src) {
                s = static_cast<uint32_t>(rng.next());
            }
            std::vector<uint32_t> o1(src.size()), o2(src.size());
            uint32_t value = static_cast<uint32_t>(rng.next());
            ref.or_fill(o1.data(), src.data(), src.size(), value);
            k.or_fill(o2.data(), src.data(), src.size(), value);
            EXPECT_EQ(o1, o2);
        }
    }
}

TEST(simd, level_names_round_trip) {
    for (auto level : {simd::Level::Scalar, simd::Level::Avx2, simd::Level::Neon}) {
        EXPECT_EQ(simd::parse_level(simd::level_name(level)), level);
    }
    EXPECT_THROW(simd::parse_level("sse9"), std::invalid_argument);
}

TEST(simd, set_level_switches_active_table) {
    auto before = simd::active_level();
    simd::set_level(simd::Level::Scalar);
    EXPECT_EQ(simd::active_level(), simd::Level::Scalar);
    simd::set_level(before);
    EXPECT_EQ(simd::active_level(), before);
}
