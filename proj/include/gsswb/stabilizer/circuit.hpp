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
#include <string>
#include <string_view>
#include <vector>

namespace gsswb {

/// Clifford gates understood by both simulators.
///
/// S is diag(1, -i). This is the inverse of the common textbook phase gate, so
/// S X S^dagger = -Y and S Y S^dagger = X.
enum class GateKind : uint8_t { H, S, CZ, X, Y, Z };

struct GateOp {
    GateKind kind;
    uint32_t a;
    uint32_t b = 0;  // second qubit of CZ

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

using Circuit = std::vector<GateOp>;

std::string_view gate_name(GateKind kind);
/// Throws std::invalid_argument for names outside {H, S, CZ, X, Y, Z}.
GateKind parse_gate(std::string_view name);
bool is_two_qubit(GateKind kind);

/// Throws std::out_of_range when a gate touches a qubit >= n, and
/// std::invalid_argument for CZ on a single qubit.
void check_circuit(const Circuit &c, size_t n);

}  // namespace gsswb
