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

#include "gsswb/stabilizer/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsswb/simd/kernels.hpp"

namespace gsswb {

namespace {

// In-place transpose of a 64x64 bit matrix, a[i] bit j <-> a[j] bit i.
void transpose64(uint64_t *a) {
    uint64_t m = 0x00000000FFFFFFFFull;
    for (unsigned j = 32; j != 0; j >>= 1, m ^= (m << j)) {
        for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
            uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

}  // namespace

Tableau::Tableau(size_t n) : n_(n), rw_(words_for_bits(2 * n)), data_(2 * n * rw_, 0), signs_(rw_, 0) {
    for (size_t i = 0; i < n; i++) {
        xcol(i)[i >> 6] |= uint64_t{1} << (i & 63);
        size_t r = n + i;
        zcol(i)[r >> 6] |= uint64_t{1} << (r & 63);
    }
}

Tableau Tableau::graph_state(const Graph &g) {
    size_t n = g.num_vertices();
    Tableau t(n);
    std::fill(t.data_.begin(), t.data_.end(), 0);
    for (size_t v = 0; v < n; v++) {
        size_t r = n + v;
        uint64_t bit = uint64_t{1} << (r & 63);
        t.xcol(v)[r >> 6] |= bit;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            t.zcol(w)[r >> 6] |= bit;
        }
        t.zcol(v)[v >> 6] |= uint64_t{1} << (v & 63);
    }
    return t;
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

void Tableau::h(size_t q) {
    uint64_t *xs = xcol(q);
    uint64_t *zs = zcol(q);
    for (size_t w = 0; w < rw_; w++) {
        signs_[w] ^= xs[w] & zs[w];
        std::swap(xs[w], zs[w]);
    }
}

void Tableau::s(size_t q) {
    uint64_t *xs = xcol(q);
    uint64_t *zs = zcol(q);
    for (size_t w = 0; w < rw_; w++) {
        zs[w] ^= xs[w];
        signs_[w] ^= xs[w] & zs[w];
    }
}

void Tableau::cz(size_t a, size_t b) {
    uint64_t *xa = xcol(a);
    uint64_t *za = zcol(a);
    uint64_t *xb = xcol(b);
    uint64_t *zb = zcol(b);
    for (size_t w = 0; w < rw_; w++) {
        signs_[w] ^= xa[w] & xb[w] & (za[w] ^ zb[w]);
        za[w] ^= xb[w];
        zb[w] ^= xa[w];
    }
}

void Tableau::x(size_t q) {
    const uint64_t *zs = zcol(q);
    for (size_t w = 0; w < rw_; w++) {
        signs_[w] ^= zs[w];
    }
}

void Tableau::y(size_t q) {
    const uint64_t *xs = xcol(q);
    const uint64_t *zs = zcol(q);
    for (size_t w = 0; w < rw_; w++) {
        signs_[w] ^= xs[w] ^ zs[w];
    }
}

void Tableau::z(size_t q) {
    const uint64_t *xs = xcol(q);
    for (size_t w = 0; w < rw_; w++) {
        signs_[w] ^= xs[w];
    }
}

void Tableau::h_all() {
    for (size_t q = 0; q < n_; q++) {
        h(q);
    }
}

void Tableau::apply(const GateOp &op) {
    check_qubit(op.a);
    switch (op.kind) {
        case GateKind::H:
            h(op.a);
            break;
        case GateKind::S:
            s(op.a);
            break;
        case GateKind::CZ:
            check_qubit(op.b);
            if (op.a == op.b) {
                throw std::invalid_argument("CZ needs two distinct qubits");
            }
            cz(op.a, op.b);
            break;
        case GateKind::X:
            x(op.a);
            break;
        case GateKind::Y:
            y(op.a);
            break;
        case GateKind::Z:
            z(op.a);
            break;
    }
#ifndef NDEBUG
    if (n_ <= 64) {
        if (auto bad = rows().invariant_violation()) {
            throw std::logic_error("tableau invariant broken after " + std::string(gate_name(op.kind)) + ": " + *bad);
        }
    }
#endif
}

void Tableau::apply(const Circuit &c) {
    for (const auto &op : c) {
        apply(op);
    }
}

bool Tableau::x_bit(size_t row, size_t q) const {
    return (xcol(q)[row >> 6] >> (row & 63)) & 1;
}

bool Tableau::z_bit(size_t row, size_t q) const {
    return (zcol(q)[row >> 6] >> (row & 63)) & 1;
}

bool Tableau::sign(size_t row) const {
    return (signs_[row >> 6] >> (row & 63)) & 1;
}

PauliString Tableau::row(size_t r) const {
    if (r >= 2 * n_) {
        throw std::out_of_range("tableau row out of range");
    }
    PauliString p(n_);
    for (size_t q = 0; q < n_; q++) {
        p.x.set(q, x_bit(r, q));
        p.z.set(q, z_bit(r, q));
    }
    p.phase = sign(r) ? 2 : 0;
    return p;
}

RowTableau Tableau::rows() const {
    RowTableau out(n_);
    size_t num_rows = 2 * n_;
    uint64_t block[64];
    for (size_t rb = 0; rb < rw_; rb++) {
        for (size_t qb = 0; qb < out.w_; qb++) {
            for (int half = 0; half < 2; half++) {
                for (size_t i = 0; i < 64; i++) {
                    size_t q = qb * 64 + i;
                    block[i] = q < n_ ? (half == 0 ? xcol(q) : zcol(q))[rb] : 0;
                }
                transpose64(block);
                for (size_t j = 0; j < 64 && rb * 64 + j < num_rows; j++) {
                    size_t r = rb * 64 + j;
                    (half == 0 ? out.xrow(r) : out.zrow(r))[qb] = block[j];
                }
            }
        }
    }
    for (size_t r = 0; r < num_rows; r++) {
        out.signs_[r] = sign(r);
    }
    return out;
}

RowTableau::RowTableau(size_t n) : n_(n), w_(words_for_bits(n)), data_(2 * n * 2 * w_, 0), signs_(2 * n, 0) {
}

PauliString RowTableau::row(size_t r) const {
    if (r >= 2 * n_) {
        throw std::out_of_range("tableau row out of range");
    }
    PauliString p(n_);
    std::copy(xrow(r), xrow(r) + w_, p.x.data());
    std::copy(zrow(r), zrow(r) + w_, p.z.data());
    p.phase = signs_[r] ? 2 : 0;
    return p;
}

unsigned RowTableau::multiply_into(size_t h, size_t i) {
    unsigned log_i = simd::kernels().pauli_mul(xrow(h), zrow(h), xrow(i), zrow(i), w_);
    log_i = (log_i + 2u * signs_[h] + 2u * signs_[i]) & 3;
    signs_[h] = static_cast<uint8_t>(log_i >> 1);
    return log_i;
}

bool RowTableau::measure(size_t q, Rng &rng) {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
    size_t p = n_;
    while (p < 2 * n_ && !xbit(p, q)) {
        p++;
    }
    if (p < 2 * n_) {
        for (size_t r = 0; r < 2 * n_; r++) {
            if (r != p && xbit(r, q)) {
                multiply_into(r, p);
            }
        }
        std::copy(xrow(p), xrow(p) + 2 * w_, xrow(p - n_));
        signs_[p - n_] = signs_[p];
        std::fill(xrow(p), xrow(p) + 2 * w_, 0);
        zrow(p)[q >> 6] = uint64_t{1} << (q & 63);
        bool outcome = rng.coin();
        signs_[p] = outcome;
        return outcome;
    }
    // Deterministic: Z_q is, up to sign, the product of the stabilizers whose
    // destabilizer partners anticommute with it.
    std::vector<uint64_t> scratch(2 * w_, 0);
    unsigned log_i = 0;
    for (size_t i = 0; i < n_; i++) {
        if (xbit(i, q)) {
            size_t r = n_ + i;
            log_i += simd::kernels().pauli_mul(scratch.data(), scratch.data() + w_, xrow(r), zrow(r), w_);
            log_i += 2u * signs_[r];
        }
    }
    if (log_i & 1) {
        throw std::logic_error("stabilizer product has an imaginary phase");
    }
    return (log_i >> 1) & 1;
}

BitVec RowTableau::measure_all(Rng &rng) {
    BitVec z(n_);
    for (size_t q = 0; q < n_; q++) {
        z.set(q, measure(q, rng));
    }
    return z;
}

AffineSupport RowTableau::support() const {
    // Work on a copy of the stabilizer half only.
    RowTableau work(n_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(n_ * 2 * w_), data_.end(), work.data_.begin());
    std::copy(signs_.begin() + static_cast<std::ptrdiff_t>(n_), signs_.end(), work.signs_.begin());
    size_t rank = 0;
    for (size_t c = 0; c < n_ && rank < n_; c++) {
        size_t pivot = rank;
        while (pivot < n_ && !work.xbit(pivot, c)) {
            pivot++;
        }
        if (pivot == n_) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(work.xrow(pivot), work.xrow(pivot) + 2 * w_, work.xrow(rank));
            std::swap(work.signs_[pivot], work.signs_[rank]);
        }
        for (size_t r = rank + 1; r < n_; r++) {
            if (work.xbit(r, c) && (work.multiply_into(r, rank) & 1)) {
                throw std::logic_error("stabilizer product has an imaginary phase");
            }
        }
        rank++;
    }
    std::vector<BitVec> basis;
    for (size_t r = 0; r < rank; r++) {
        BitVec b(n_);
        std::copy(work.xrow(r), work.xrow(r) + w_, b.data());
        basis.push_back(std::move(b));
    }
    std::vector<BitVec> constraints;
    std::vector<uint8_t> rhs;
    for (size_t r = rank; r < n_; r++) {
        BitVec c(n_);
        std::copy(work.zrow(r), work.zrow(r) + w_, c.data());
        constraints.push_back(std::move(c));
        rhs.push_back(work.signs_[r]);
    }
    auto offset = solve_gf2(n_, constraints, rhs);
    if (!offset) {
        throw std::logic_error("Z-only stabilizers are inconsistent");
    }
    return AffineSupport(n_, std::move(basis), std::move(*offset), std::move(constraints), std::move(rhs));
}

std::optional<std::string> RowTableau::invariant_violation() const {
    const auto &k = simd::kernels();
    size_t rows = 2 * n_;
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = i + 1; j < rows; j++) {
            bool anti = k.and_parity(xrow(i), zrow(j), w_) ^ k.and_parity(zrow(i), xrow(j), w_);
            bool want = i < n_ && j == i + n_;
            if (anti != want) {
                return "rows " + std::to_string(i) + " and " + std::to_string(j) +
                       (anti ? " anticommute" : " commute");
            }
        }
    }
    return std::nullopt;
}

}  // namespace gsswb
