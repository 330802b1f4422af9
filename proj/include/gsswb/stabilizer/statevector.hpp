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

#include <complex>
#include <vector>

#include "gsswb/common/bitvec.hpp"
#include "gsswb/stabilizer/circuit.hpp"

namespace gsswb {

/// Dense reference simulator for small qubit counts. Basis index bit q is
/// the value of qubit q.
class StateVector {
   public:
    static constexpr size_t kMaxQubits = 14;
    static constexpr double kZeroThreshold = 1e-12;

    /// |0^n>. Throws SizeCapExceeded above kMaxQubits.
    explicit StateVector(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amp_;
    }

    /// Same gate matrices as the tableau: S = diag(1, -i), Y = [[0,-i],[i,0]].
    void apply(const GateOp &op);
    void apply(const Circuit &c);

    double norm() const;
    double probability(uint64_t index) const {
        return std::norm(amp_[index]);
    }
    /// Basis strings with probability above kZeroThreshold, in index order.
    std::vector<BitVec> support() const;

   private:
    void apply_1q(size_t q, std::complex<double> m00, std::complex<double> m01, std::complex<double> m10,
                  std::complex<double> m11);

    size_t n_;
    std::vector<std::complex<double>> amp_;
};

}  // namespace gsswb
