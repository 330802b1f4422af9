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

#include "gsswb/stabilizer/circuit.hpp"

#include <stdexcept>

namespace gsswb {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::CZ:
            return "CZ";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
    }
    return "?";
}

GateKind parse_gate(std::string_view name) {
    for (auto k : {GateKind::H, GateKind::S, GateKind::CZ, GateKind::X, GateKind::Y, GateKind::Z}) {
        if (name == gate_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unsupported gate '" + std::string(name) + "' (Clifford set is H, S, CZ, X, Y, Z)");
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CZ;
}

void check_circuit(const Circuit &c, size_t n) {
    for (const auto &op : c) {
        if (op.a >= n || (is_two_qubit(op.kind) && op.b >= n)) {
            throw std::out_of_range(
                std::string(gate_name(op.kind)) + " targets a qubit outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (is_two_qubit(op.kind) && op.a == op.b) {
            throw std::invalid_argument("CZ needs two distinct qubits");
        }
    }
}

}  // namespace gsswb
