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

// Compiled with -mavx2 -mpopcnt. Nothing in this file may run before the
// dispatcher has confirmed AVX2 support.

#include <immintrin.h>

#include <bit>

#include "gsswb/simd/kernels.hpp"

namespace gsswb::simd {
namespace {

void xor_words_avx2(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

inline unsigned popcount256(__m256i v) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return std::popcount(lanes[0]) + std::popcount(lanes[1]) + std::popcount(lanes[2]) + std::popcount(lanes[3]);
}

unsigned pauli_mul_avx2(uint64_t *dst_x, uint64_t *dst_z, const uint64_t *src_x, const uint64_t *src_z, size_t n) {
    __m256i cnt1 = _mm256_setzero_si256();
    __m256i cnt2 = _mm256_setzero_si256();
    unsigned total = 0;
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst_x + i));
        __m256i z1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst_z + i));
        __m256i x2 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src_x + i));
        __m256i z2 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src_z + i));
        __m256i nx = _mm256_xor_si256(x1, x2);
        __m256i nz = _mm256_xor_si256(z1, z2);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst_x + i), nx);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst_z + i), nz);
        __m256i x1z2 = _mm256_and_si256(x1, z2);
        __m256i anti = _mm256_xor_si256(_mm256_and_si256(x2, z1), x1z2);
        __m256i t = _mm256_xor_si256(_mm256_xor_si256(cnt1, nx), _mm256_xor_si256(nz, x1z2));
        cnt2 = _mm256_xor_si256(cnt2, _mm256_and_si256(t, anti));
        cnt1 = _mm256_xor_si256(cnt1, anti);
    }
    total += popcount256(cnt1) + 2 * popcount256(cnt2);
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

bool and_parity_avx2(const uint64_t *a, const uint64_t *b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return (std::popcount(folded) & 1) != 0;
}

void or_fill_avx2(uint32_t *dst, const uint32_t *src, size_t n, uint32_t value) {
    __m256i v = _mm256_set1_epi32(static_cast<int>(value));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_or_si256(s, v));
    }
    for (; i < n; i++) {
        dst[i] = src[i] | value;
    }
}

}  // namespace

namespace detail {
const Kernels avx2_kernels{
    xor_words_avx2, pauli_mul_avx2, and_parity_avx2, or_fill_avx2, Level::Avx2,
};
}  // namespace detail

}  // namespace gsswb::simd
