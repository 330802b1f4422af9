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

#include <optional>
#include <vector>

#include "gsswb/common/bitvec.hpp"
#include "gsswb/common/rng.hpp"

namespace gsswb {

/// One solution of <rows[j], z> = rhs[j] over GF(2) (free variables set to
/// zero), or nullopt if the system is inconsistent.
std::optional<BitVec> solve_gf2(size_t n, std::vector<BitVec> rows, std::vector<uint8_t> rhs);

/// An affine subspace {offset + span(basis)} of GF(2)^n, also described by
/// parity constraints <row_j, z> = rhs_j.
///
/// basis holds independent vectors and offset is some member. canonical() gives the unique reduced form used
/// for equality.
class AffineSupport {
   public:
    AffineSupport() = default;
    AffineSupport(size_t n, std::vector<BitVec> basis, BitVec offset, std::vector<BitVec> constraints,
                  std::vector<uint8_t> rhs);

    /// Solution set of the given (independent or not, consistent) parity
    /// constraints. Throws std::invalid_argument if they are inconsistent.
    static AffineSupport from_constraints(size_t n, std::vector<BitVec> rows, std::vector<uint8_t> rhs);
    /// Span of the given vectors shifted by offset.
    static AffineSupport from_generators(const BitVec &offset, const std::vector<BitVec> &generators);

    size_t num_bits() const {
        return n_;
    }
    size_t rank() const {
        return basis_.size();
    }
    const std::vector<BitVec> &basis() const {
        return basis_;
    }
    const BitVec &offset() const {
        return offset_;
    }
    const std::vector<BitVec> &constraints() const {
        return constraints_;
    }
    const std::vector<uint8_t> &rhs() const {
        return rhs_;
    }

    bool contains(const BitVec &z) const;
    /// Uniform member.
    BitVec sample(Rng &rng) const;
    /// All 2^rank members in Gray-code order. Throws SizeCapExceeded if rank > max_rank.
    std::vector<BitVec> enumerate(size_t max_rank = 20) const;

    /// Fully reduced basis (each pivot column set in exactly one vector,
    /// vectors ordered by pivot) and the unique offset with zeros on pivots.
    AffineSupport canonical() const;
    bool same_set(const AffineSupport &other) const;

   private:
    size_t n_ = 0;
    std::vector<BitVec> basis_;
    BitVec offset_;
    std::vector<BitVec> constraints_;
    std::vector<uint8_t> rhs_;
};

}  // namespace gsswb
