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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gsswb/simd/kernels.hpp"

namespace gsswb::simd {

bool supported(Level level) {
    switch (level) {
        case Level::Scalar:
            return true;
        case Level::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
        case Level::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Kernels &kernels_for(Level level) {
    if (!supported(level)) {
        throw std::invalid_argument("SIMD level '" + std::string(level_name(level)) + "' is not supported on this CPU");
    }
    switch (level) {
#if defined(__x86_64__) || defined(_M_X64)
        case Level::Avx2:
            return detail::avx2_kernels;
#endif
#if defined(__aarch64__)
        case Level::Neon:
            return detail::neon_kernels;
#endif
        default:
            return detail::scalar_kernels;
    }
}

static Level best_level() {
    if (const char *env = std::getenv("GSSWB_SIMD")) {
        Level requested = parse_level(env);
        if (supported(requested)) {
            return requested;
        }
        return Level::Scalar;
    }
    if (supported(Level::Avx2)) {
        return Level::Avx2;
    }
    if (supported(Level::Neon)) {
        return Level::Neon;
    }
    return Level::Scalar;
}

static std::atomic<const Kernels *> &active_slot() {
    static std::atomic<const Kernels *> slot{&kernels_for(best_level())};
    return slot;
}

const Kernels &kernels() {
    return *active_slot().load(std::memory_order_relaxed);
}

void set_level(Level level) {
    active_slot().store(&kernels_for(level), std::memory_order_relaxed);
}

Level active_level() {
    return kernels().level;
}

std::string_view level_name(Level level) {
    switch (level) {
        case Level::Scalar:
            return "scalar";
        case Level::Avx2:
            return "avx2";
        case Level::Neon:
            return "neon";
    }
    return "unknown";
}

Level parse_level(std::string_view name) {
    if (name == "scalar") {
        return Level::Scalar;
    }
    if (name == "avx2") {
        return Level::Avx2;
    }
    if (name == "neon") {
        return Level::Neon;
    }
    throw std::invalid_argument("unknown SIMD level '" + std::string(name) + "'");
}

}  // namespace gsswb::simd
