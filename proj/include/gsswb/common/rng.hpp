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

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace gsswb {

/// Derives a child seed from a parent seed, a stage tag and an index.
///
/// All randomness in the workbench flows root -> stage -> trial through this
/// function, so a single root seed reproduces every report. The mixing is
/// FNV-1a over the tag followed by two SplitMix64 finalizer rounds.
uint64_t derive_seed(uint64_t parent, std::string_view stage, uint64_t index = 0);

/// Seeded generator with portable bounded sampling.
///
/// std::uniform_int_distribution is implementation-defined, so bounded draws
/// are done here with Lemire's multiply-shift rejection method to keep
/// results identical across standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);
    /// Uniform in [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace gsswb
