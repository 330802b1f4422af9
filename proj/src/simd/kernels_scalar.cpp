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

#include <bit>

#include "gsswb/simd/kernels.hpp"

namespace gsswb::simd {
namespace {

void xor_words_scalar(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

// Each anticommuting position contributes +i or -i. The pair (cnt1, cnt2) is a
// per-position two-bit counter mod 4; it is popcounted once at the end.
unsigned pauli_mul_scalar(uint64_t *dst_x, uint64_t *dst_z, const uint64_t *src_x, const uint64_t *src_z, size_t n) {
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t i = 0; i < n; i++) {
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
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
    }
    return (std::popcount(cnt1) + 2 * std::popcount(cnt2)) & 3;
}

bool and_parity_scalar(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc ^= a[i] & b[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

void or_fill_scalar(uint32_t *dst, const uint32_t *src, size_t n, uint32_t value) {
    for (size_t i = 0; i < n; i++) {
        dst[i] = src[i] | value;
    }
}

}  // namespace

namespace detail {
const Kernels scalar_kernels{
    xor_words_scalar, pauli_mul_scalar, and_parity_scalar, or_fill_scalar, Level::Scalar,
};
}  // namespace detail

}  // namespace gsswb::simd
