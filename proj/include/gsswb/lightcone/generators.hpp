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

#include "gsswb/graph/graph.hpp"
#include "gsswb/lightcone/circuit.hpp"

namespace gsswb {

/// Declares "xv:<v>" for every vertex, "xe:<e>" for every edge and
/// "r:<k>" for k < random_bits, in that order.
ClassicalCircuit instance_input_circuit(const Graph &g, uint32_t fan_in, size_t random_bits = 0);

/// Every output is one shared constant 0.
ClassicalCircuit zeros_circuit(const Graph &g, uint32_t fan_in = 2);
/// z_v := x_v, wired straight from the input (depth 0).
ClassicalCircuit copy_circuit(const Graph &g, uint32_t fan_in = 2);
/// z_v := x_v xor x_w for the smallest neighbour w (depth 1); isolated
/// vertices copy x_v.
ClassicalCircuit parity_circuit(const Graph &g, uint32_t fan_in = 2);
/// Layered circuit with |V| random bits. Layer 0 holds the inputs; each of
/// the `depth` layers has |V| gates reading fan_in distinct nodes of the
/// previous layer through a random truth table; z_v is gate v of the last
/// layer. At depth 0 each output is a uniformly chosen input.
ClassicalCircuit random_layered_circuit(const Graph &g, uint32_t fan_in, uint32_t depth, uint64_t seed);

enum class CircuitFamily { Zeros, Copy, Parity, Random };
std::string_view family_name(CircuitFamily f);
/// "zeros", "copy", "parity", "random".
CircuitFamily parse_family(std::string_view name);
ClassicalCircuit make_circuit(CircuitFamily family, const Graph &g, uint32_t fan_in, uint32_t depth, uint64_t seed);

/// Largest backward lightcone over the outputs.
size_t max_backward_lightcone(const ClassicalCircuit &c);

}  // namespace gsswb
