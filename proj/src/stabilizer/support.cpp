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

#include "gsswb/stabilizer/support.hpp"

#include <stdexcept>

#include "gsswb/common/errors.hpp"

namespace gsswb {

namespace {

// Gaussian elimination in place. Afterwards rows[0..rank) have strictly
// increasing leading columns `pivots`; with `reduce` every pivot column is
// cleared from all other rows. Rows past rank are zero. rhs (optional) is
// permuted and combined along with the rows.
size_t eliminate(std::vector<BitVec> &rows, std::vector<uint8_t> *rhs, bool reduce, std::vector<size_t> &pivots) {
    pivots.clear();
    if (rows.empty()) {
        return 0;
    }
    size_t n = rows[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c]) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        if (rhs != nullptr) {
            std::swap((*rhs)[pivot], (*rhs)[rank]);
        }
        for (size_t r = reduce ? 0 : rank + 1; r < rows.size(); r++) {
            if (r != rank && rows[r][c]) {
                rows[r] ^= rows[rank];
                if (rhs != nullptr) {
                    (*rhs)[r] ^= (*rhs)[rank];
                }
            }
        }
        pivots.push_back(c);
        rank++;
    }
    return rank;
}

// Null space of fully reduced rows with the given pivots: one vector per free
// column f, with f set and pivot p_j set to rows[j][f].
std::vector<BitVec> null_space(const std::vector<BitVec> &rows, const std::vector<size_t> &pivots, size_t n) {
    std::vector<uint8_t> is_pivot(n, 0);
    for (size_t p : pivots) {
        is_pivot[p] = 1;
    }
    std::vector<BitVec> out;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(n);
        v.set(f);
        for (size_t j = 0; j < pivots.size(); j++) {
            if (rows[j][f]) {
                v.set(pivots[j]);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::optional<BitVec> solve_gf2(size_t n, std::vector<BitVec> rows, std::vector<uint8_t> rhs) {
    if (rows.size() != rhs.size()) {
        throw std::invalid_argument("constraint rows and right-hand sides differ in count");
    }
    std::vector<size_t> pivots;
    size_t rank = eliminate(rows, &rhs, true, pivots);
    for (size_t r = rank; r < rows.size(); r++) {
        if (rhs[r]) {
            return std::nullopt;
        }
    }
    BitVec z(n);
    for (size_t j = 0; j < rank; j++) {
        if (rhs[j]) {
            z.set(pivots[j]);
        }
    }
    return z;
}

AffineSupport::AffineSupport(size_t n, std::vector<BitVec> basis, BitVec offset, std::vector<BitVec> constraints,
                             std::vector<uint8_t> rhs)
    : n_(n),
      basis_(std::move(basis)),
      offset_(std::move(offset)),
      constraints_(std::move(constraints)),
      rhs_(std::move(rhs)) {
    if (offset_.size() != n_ || rhs_.size() != constraints_.size()) {
        throw std::invalid_argument("affine support: inconsistent dimensions");
    }
}

AffineSupport AffineSupport::from_constraints(size_t n, std::vector<BitVec> rows, std::vector<uint8_t> rhs) {
    if (rows.size() != rhs.size()) {
        throw std::invalid_argument("constraint rows and right-hand sides differ in count");
    }
    std::vector<BitVec> original = rows;
    std::vector<uint8_t> original_rhs = rhs;
    std::vector<size_t> pivots;
    size_t rank = eliminate(rows, &rhs, true, pivots);
    for (size_t r = rank; r < rows.size(); r++) {
        if (rhs[r]) {
            throw std::invalid_argument("parity constraints are inconsistent");
        }
    }
    BitVec offset(n);
    for (size_t j = 0; j < rank; j++) {
        if (rhs[j]) {
            offset.set(pivots[j]);
        }
    }
    rows.resize(rank);
    auto basis = null_space(rows, pivots, n);
    return AffineSupport(n, std::move(basis), std::move(offset), std::move(original), std::move(original_rhs));
}

AffineSupport AffineSupport::from_generators(const BitVec &offset, const std::vector<BitVec> &generators) {
    size_t n = offset.size();
    std::vector<BitVec> rows = generators;
    std::vector<size_t> pivots;
    size_t rank = eliminate(rows, nullptr, true, pivots);
    rows.resize(rank);
    // The orthogonal complement of span(rows) supplies the constraints.
    auto constraints = null_space(rows, pivots, n);
    std::vector<uint8_t> rhs;
    for (const auto &c : constraints) {
        rhs.push_back(c.dot(offset));
    }
    return AffineSupport(n, std::move(rows), offset, std::move(constraints), std::move(rhs));
}

bool AffineSupport::contains(const BitVec &z) const {
    if (z.size() != n_) {
        throw std::invalid_argument(
            "bit string has length " + std::to_string(z.size()) + ", expected " + std::to_string(n_));
    }
    for (size_t j = 0; j < constraints_.size(); j++) {
        if (constraints_[j].dot(z) != (rhs_[j] != 0)) {
            return false;
        }
    }
    return true;
}

BitVec AffineSupport::sample(Rng &rng) const {
    BitVec z = offset_;
    for (const auto &b : basis_) {
        if (rng.coin()) {
            z ^= b;
        }
    }
    return z;
}

std::vector<BitVec> AffineSupport::enumerate(size_t max_rank) const {
    if (rank() > max_rank) {
        throw SizeCapExceeded("support enumeration", rank(), max_rank);
    }
    std::vector<BitVec> out;
    out.reserve(size_t{1} << rank());
    BitVec z = offset_;
    out.push_back(z);
    for (uint64_t i = 1; i < (uint64_t{1} << rank()); i++) {
        // Gray code: step i flips basis vector countr_zero(i).
        z ^= basis_[static_cast<size_t>(__builtin_ctzll(i))];
        out.push_back(z);
    }
    return out;
}

AffineSupport AffineSupport::canonical() const {
    std::vector<BitVec> rows = basis_;
    std::vector<size_t> pivots;
    size_t rank = eliminate(rows, nullptr, true, pivots);
    rows.resize(rank);
    BitVec offset = offset_;
    for (size_t j = 0; j < rank; j++) {
        if (offset[pivots[j]]) {
            offset ^= rows[j];
        }
    }
    return AffineSupport(n_, std::move(rows), std::move(offset), constraints_, rhs_);
}

bool AffineSupport::same_set(const AffineSupport &other) const {
    if (n_ != other.n_ || rank() != other.rank()) {
        return false;
    }
    auto a = canonical();
    auto b = other.canonical();
    return a.basis_ == b.basis_ && a.offset_ == b.offset_;
}

}  // namespace gsswb
