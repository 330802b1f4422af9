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

#include "gsswb/common/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gsswb/simd/kernels.hpp"

namespace gsswb {

static void require_same_size(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(*this, other);
    simd::kernels().xor_words(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(*this, other);
    return simd::kernels().and_parity(words_.data(), other.words_.data(), words_.size());
}

size_t BitVec::first_set() const {
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return (i << 6) + std::countr_zero(words_[i]);
        }
    }
    return n_;
}

std::vector<size_t> BitVec::set_bits() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < words_.size(); i++) {
        uint64_t w = words_[i];
        while (w) {
            out.push_back((i << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            v.set(i);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bad character in bit string at index " + std::to_string(i));
        }
    }
    return v;
}

BitVec BitVec::from_uint(uint64_t value, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n && i < 64; i++) {
        if ((value >> i) & 1) {
            v.set(i);
        }
    }
    return v;
}

bool operator<(const BitVec &a, const BitVec &b) {
    if (a.n_ != b.n_) {
        return a.n_ < b.n_;
    }
    return a.words_ < b.words_;
}

}  // namespace gsswb
