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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsswb {

inline size_t words_for_bits(size_t bits) {
    return (bits + 63) >> 6;
}

/// Fixed-length bit string packed into 64-bit words, bit i at word i/64, position i%64.
///
/// Padding bits past size() are always zero, so word-level equality and
/// popcount are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), words_(words_for_bits(n), 0) {
    }

    size_t size() const {
        return n_;
    }
    size_t num_words() const {
        return words_.size();
    }
    uint64_t *data() {
        return words_.data();
    }
    const uint64_t *data() const {
        return words_.data();
    }
    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    bool operator[](size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool get(size_t i) const {
        return (*this)[i];
    }
    void set(size_t i, bool value = true) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void clear();

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of popcount(*this & other).
    bool dot(const BitVec &other) const;
    /// Index of the lowest set bit, or size() if none.
    size_t first_set() const;
    std::vector<size_t> set_bits() const;

    /// '0'/'1' characters, index 0 first.
    std::string to_string() const;
    /// Throws std::invalid_argument on characters other than '0' and '1'.
    static BitVec from_string(std::string_view text);

    /// Bits 0..min(n,64)-1 taken from `value`.
    static BitVec from_uint(uint64_t value, size_t n);
    /// Bits 0..63 as an integer (higher bits ignored).
    uint64_t low_word() const {
        return words_.empty() ? 0 : words_[0];
    }

    friend bool operator==(const BitVec &a, const BitVec &b) = default;
    friend bool operator<(const BitVec &a, const BitVec &b);

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace gsswb
