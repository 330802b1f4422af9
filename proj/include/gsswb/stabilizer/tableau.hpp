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
#include <optional>
#include <string>
#include <vector>

#include "gsswb/common/bitvec.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/graph/graph.hpp"
#include "gsswb/stabilizer/circuit.hpp"
#include "gsswb/stabilizer/pauli.hpp"
#include "gsswb/stabilizer/support.hpp"

namespace gsswb {

class RowTableau;

/// Stabilizer tableau with 2n Hermitian rows: destabilizers 0..n-1 and
/// stabilizers n..2n-1, each a Pauli string plus a sign bit.
///
/// Storage is qubit-major: for each qubit one packed column of x bits and one
/// of z bits over all 2n rows, so every gate is a handful of word operations
/// per 64 rows. Measurement and support extraction work on the row-major
/// RowTableau obtained with rows().
class Tableau {
   public:
    /// |0^n>: destabilizer i = X_i, stabilizer i = Z_i.
    explicit Tableau(size_t n);

    /// Graph state of g built directly: stabilizer v = X_v Z_{N(v)},
    /// destabilizer v = Z_v.
    static Tableau graph_state(const Graph &g);

    size_t num_qubits() const {
        return n_;
    }

    void h(size_t q);
    /// Conjugation by diag(1, -i): X -> -Y, Y -> X, Z -> Z.
    void s(size_t q);
    void cz(size_t a, size_t b);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void h_all();

    /// Validates indices first (std::out_of_range / std::invalid_argument).
    void apply(const GateOp &op);
    void apply(const Circuit &c);

    bool x_bit(size_t row, size_t q) const;
    bool z_bit(size_t row, size_t q) const;
    bool sign(size_t row) const;
    PauliString row(size_t r) const;
    PauliString stabilizer(size_t i) const {
        return row(n_ + i);
    }
    PauliString destabilizer(size_t i) const {
        return row(i);
    }

    RowTableau rows() const;

    friend bool operator==(const Tableau &, const Tableau &) = default;

   private:
    uint64_t *xcol(size_t q) {
        return data_.data() + q * 2 * rw_;
    }
    uint64_t *zcol(size_t q) {
        return data_.data() + q * 2 * rw_ + rw_;
    }
    const uint64_t *xcol(size_t q) const {
        return data_.data() + q * 2 * rw_;
    }
    const uint64_t *zcol(size_t q) const {
        return data_.data() + q * 2 * rw_ + rw_;
    }
    void check_qubit(size_t q) const;

    size_t n_;
    size_t rw_;  // words per column (2n rows)
    std::vector<uint64_t> data_;
    std::vector<uint64_t> signs_;
};

/// Row-major copy of a tableau supporting computational-basis measurement.
class RowTableau {
   public:
    explicit RowTableau(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    PauliString row(size_t r) const;
    PauliString stabilizer(size_t i) const {
        return row(n_ + i);
    }
    PauliString destabilizer(size_t i) const {
        return row(i);
    }

    /// Measures qubit q in the Z basis, collapsing the state. Random outcomes
    /// draw one coin from rng.
    bool measure(size_t q, Rng &rng);
    /// Measures every qubit in order 0..n-1.
    BitVec measure_all(Rng &rng);

    /// Computational-basis support: offset + span of the stabilizers' X
    /// parts, cut out by the Z-only elements of the stabilizer group.
    /// Throws std::logic_error if a Z-only product carries a factor of +-i.
    AffineSupport support() const;

    /// Describes the first broken tableau relation (stabilizers commute
    /// pairwise, destabilizer i anticommutes with stabilizer i only,
    /// destabilizers commute pairwise, every row Hermitian), or nullopt.
    /// Quadratic in the number of rows.
    std::optional<std::string> invariant_violation() const;

   private:
    friend class Tableau;

    uint64_t *xrow(size_t r) {
        return data_.data() + r * 2 * w_;
    }
    uint64_t *zrow(size_t r) {
        return data_.data() + r * 2 * w_ + w_;
    }
    const uint64_t *xrow(size_t r) const {
        return data_.data() + r * 2 * w_;
    }
    const uint64_t *zrow(size_t r) const {
        return data_.data() + r * 2 * w_ + w_;
    }
    bool xbit(size_t r, size_t q) const {
        return (xrow(r)[q >> 6] >> (q & 63)) & 1;
    }
    /// row h <- row h * row i; returns the resulting power of i (mod 4).
    unsigned multiply_into(size_t h, size_t i);

    size_t n_;
    size_t w_;  // words per x or z half-row
    std::vector<uint64_t> data_;
    std::vector<uint8_t> signs_;
};

}  // namespace gsswb
