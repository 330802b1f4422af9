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

#pragma once

// Data-parallel inner loops of the workbench.
//
// Every kernel has a portable scalar reference implementation operating on
// 64-bit words, plus vector variants (AVX2 on x86-64, NEON on AArch64). The
// active table is chosen once at startup from CPU features and can be forced
// with the GSSWB_SIMD environment variable ("scalar", "avx2", "neon") or
// set_level(). All variants are required to produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gsswb::simd {

enum class Level { Scalar, Avx2, Neon };

struct Kernels {
    /// dst[i] ^= src[i].
    void (*xor_words)(uint64_t *dst, const uint64_t *src, size_t n);

    /// In-place Pauli product (dst_x, dst_z) <- (dst_x, dst_z) * (src_x, src_z).
    ///
    /// Encoding per bit position: (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y.
    /// Returns the power of i (mod 4) produced by the single-qubit products,
    /// not including the signs carried by either operand.
    unsigned (*pauli_mul)(uint64_t *dst_x, uint64_t *dst_z, const uint64_t *src_x, const uint64_t *src_z, size_t n);

    /// Parity of popcount(a & b).
    bool (*and_parity)(const uint64_t *a, const uint64_t *b, size_t n);

    /// dst[i] = src[i] | value. Used to extend subset-neighborhood tables.
    void (*or_fill)(uint32_t *dst, const uint32_t *src, size_t n, uint32_t value);

    Level level;
};

bool supported(Level level);
/// Table for a specific level; throws std::invalid_argument if unsupported here.
const Kernels &kernels_for(Level level);
/// Currently active table.
const Kernels &kernels();
void set_level(Level level);
Level active_level();

std::string_view level_name(Level level);
Level parse_level(std::string_view name);

namespace detail {
extern const Kernels scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const Kernels avx2_kernels;
#endif
#if defined(__aarch64__)
extern const Kernels neon_kernels;
#endif
}  // namespace detail

}  // namespace gsswb::simd
