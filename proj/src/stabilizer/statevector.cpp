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

#include "gsswb/stabilizer/statevector.hpp"

#include <cmath>

#include "gsswb/common/errors.hpp"

namespace gsswb {

StateVector::StateVector(size_t n) : n_(n) {
    if (n > kMaxQubits) {
        throw SizeCapExceeded("state-vector simulation", n, kMaxQubits);
    }
    amp_.assign(size_t{1} << n, 0.0);
    amp_[0] = 1.0;
}

void StateVector::apply_1q(size_t q, std::complex<double> m00, std::complex<double> m01, std::complex<double> m10,
                           std::complex<double> m11) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (i & bit) {
            continue;
        }
        auto a0 = amp_[i];
        auto a1 = amp_[i | bit];
        amp_[i] = m00 * a0 + m01 * a1;
        amp_[i | bit] = m10 * a0 + m11 * a1;
    }
}

void StateVector::apply(const GateOp &op) {
    check_circuit({op}, n_);
    const std::complex<double> i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    switch (op.kind) {
        case GateKind::H:
            apply_1q(op.a, r, r, r, -r);
            break;
        case GateKind::S:
            apply_1q(op.a, 1.0, 0.0, 0.0, -i);
            break;
        case GateKind::X:
            apply_1q(op.a, 0.0, 1.0, 1.0, 0.0);
            break;
        case GateKind::Y:
            apply_1q(op.a, 0.0, -i, i, 0.0);
            break;
        case GateKind::Z:
            apply_1q(op.a, 1.0, 0.0, 0.0, -1.0);
            break;
        case GateKind::CZ: {
            size_t mask = (size_t{1} << op.a) | (size_t{1} << op.b);
            for (size_t k = 0; k < amp_.size(); k++) {
                if ((k & mask) == mask) {
                    amp_[k] = -amp_[k];
                }
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit &c) {
    for (const auto &op : c) {
        apply(op);
    }
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amp_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::vector<BitVec> StateVector::support() const {
    std::vector<BitVec> out;
    for (uint64_t k = 0; k < amp_.size(); k++) {
        if (probability(k) > kZeroThreshold) {
            out.push_back(BitVec::from_uint(k, n_));
        }
    }
    return out;
}

}  // namespace gsswb
