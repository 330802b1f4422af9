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

// Only built on AArch64, where NEON is architecturally guaranteed.

#include <arm_neon.h>

#include <bit>

#include "gsswb/simd/kernels.hpp"

namespace gsswb::simd {
namespace {

void xor_words_neon(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

inline unsigned popcount128(uint64x2_t v) {
    return static_cast<unsigned>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

unsigned pauli_mul_neon(uint64_t *dst_x, uint64_t *dst_z, const uint64_t *src_x, const uint64_t *src_z, size_t n) {
    uint64x2_t cnt1 = vdupq_n_u64(0);
    uint64x2_t cnt2 = vdupq_n_u64(0);
    unsigned total = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t x1 = vld1q_u64(dst_x + i);
        uint64x2_t z1 = vld1q_u64(dst_z + i);
        uint64x2_t x2 = vld1q_u64(src_x + i);
        uint64x2_t z2 = vld1q_u64(src_z + i);
        uint64x2_t nx = veorq_u64(x1, x2);
        uint64x2_t nz = veorq_u64(z1, z2);
        vst1q_u64(dst_x + i, nx);
        vst1q_u64(dst_z + i, nz);
        uint64x2_t x1z2 = vandq_u64(x1, z2);
        uint64x2_t anti = veorq_u64(vandq_u64(x2, z1), x1z2);
        uint64x2_t t = veorq_u64(veorq_u64(cnt1, nx), veorq_u64(nz, x1z2));
        cnt2 = veorq_u64(cnt2, vandq_u64(t, anti));
        cnt1 = veorq_u64(cnt1, anti);
    }
    total += popcount128(cnt1) + 2 * popcount128(cnt2);
    uint64_t c1 = 0;
    uint64_t c2 = 0;
    for (; i < n; i++) {
        uint64_t x1 = dst_x[i];
        uint64_t z1 = dst_z[i];
        uint64_t x2 = src_x[i];
        uint64_t z2 = src_z[i];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        dst_x[i] = nx;
        dst_z[i] = nz;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        c2 ^= (c1 ^ nx ^ nz ^ x1z2) & anti;
        c1 ^= anti;
    }
    total += std::popcount(c1) + 2 * std::popcount(c2);
    return total & 3;
}

bool and_parity_neon(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return (std::popcount(folded) & 1) != 0;
}

void or_fill_neon(uint32_t *dst, const uint32_t *src, size_t n, uint32_t value) {
    uint32x4_t v = vdupq_n_u32(value);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vst1q_u32(dst + i, vorrq_u32(vld1q_u32(src + i), v));
    }
    for (; i < n; i++) {
        dst[i] = src[i] | value;
    }
}

}  // namespace

namespace detail {
const Kernels neon_kernels{
    xor_words_neon, pauli_mul_neon, and_parity_neon, or_fill_neon, Level::Neon,
};
}  // namespace detail

}  // namespace gsswb::simd
