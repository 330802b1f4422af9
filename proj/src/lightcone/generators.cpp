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

#include "gsswb/lightcone/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsswb/common/rng.hpp"

namespace gsswb {

ClassicalCircuit instance_input_circuit(const Graph &g, uint32_t fan_in, size_t random_bits) {
    ClassicalCircuit c(fan_in);
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        c.add_input("xv:" + std::to_string(v));
    }
    for (EdgeId e = 0; e < g.num_edges(); e++) {
        c.add_input("xe:" + std::to_string(e));
    }
    for (size_t k = 0; k < random_bits; k++) {
        c.add_input("r:" + std::to_string(k));
    }
    return c;
}

ClassicalCircuit zeros_circuit(const Graph &g, uint32_t fan_in) {
    auto c = instance_input_circuit(g, fan_in);
    auto zero = c.add_constant(false, "zero");
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        c.add_output("z:" + std::to_string(v), zero);
    }
    return c;
}

ClassicalCircuit copy_circuit(const Graph &g, uint32_t fan_in) {
    auto c = instance_input_circuit(g, fan_in);
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        c.add_output("z:" + std::to_string(v), v);
    }
    return c;
}

ClassicalCircuit parity_circuit(const Graph &g, uint32_t fan_in) {
    if (fan_in < 2) {
        throw std::invalid_argument("parity circuit needs fan-in at least 2");
    }
    auto c = instance_input_circuit(g, fan_in);
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        auto nb = g.neighbors(v);
        ClassicalCircuit::Node src = v;
        if (!nb.empty()) {
            src = c.add_gate({v, *std::min_element(nb.begin(), nb.end())}, {0, 1, 1, 0});
        }
        c.add_output("z:" + std::to_string(v), src);
    }
    return c;
}

ClassicalCircuit random_layered_circuit(const Graph &g, uint32_t fan_in, uint32_t depth, uint64_t seed) {
    size_t n = g.num_vertices();
    auto c = instance_input_circuit(g, fan_in, n);
    Rng rng(derive_seed(seed, "circuit"));
    std::vector<ClassicalCircuit::Node> layer(c.num_inputs());
    for (size_t i = 0; i < layer.size(); i++) {
        layer[i] = static_cast<ClassicalCircuit::Node>(i);
    }
    if (depth == 0) {
        for (Vertex v = 0; v < n; v++) {
            c.add_output("z:" + std::to_string(v), layer[rng.below(layer.size())]);
        }
        return c;
    }
    if (fan_in == 0 || fan_in > layer.size() || fan_in > n) {
        throw std::invalid_argument("fan-in exceeds the layer width");
    }
    for (uint32_t d = 0; d < depth; d++) {
        std::vector<ClassicalCircuit::Node> next;
        for (size_t i = 0; i < n; i++) {
            std::vector<ClassicalCircuit::Node> ins;
            while (ins.size() < fan_in) {
                auto pick = layer[rng.below(layer.size())];
                if (std::find(ins.begin(), ins.end(), pick) == ins.end()) {
                    ins.push_back(pick);
                }
            }
            std::vector<uint8_t> table(size_t{1} << fan_in);
            for (auto &bit : table) {
                bit = rng.coin();
            }
            next.push_back(c.add_gate(std::move(ins), std::move(table)));
        }
        layer = std::move(next);
    }
    for (Vertex v = 0; v < n; v++) {
        c.add_output("z:" + std::to_string(v), layer[v]);
    }
    return c;
}

std::string_view family_name(CircuitFamily f) {
    switch (f) {
        case CircuitFamily::Zeros:
            return "zeros";
        case CircuitFamily::Copy:
            return "copy";
        case CircuitFamily::Parity:
            return "parity";
        case CircuitFamily::Random:
            return "random";
    }
    return "?";
}

CircuitFamily parse_family(std::string_view name) {
    for (auto f : {CircuitFamily::Zeros, CircuitFamily::Copy, CircuitFamily::Parity, CircuitFamily::Random}) {
        if (name == family_name(f)) {
            return f;
        }
    }
    throw std::invalid_argument("unknown circuit family '" + std::string(name) + "' (zeros, copy, parity, random)");
}

ClassicalCircuit make_circuit(CircuitFamily family, const Graph &g, uint32_t fan_in, uint32_t depth, uint64_t seed) {
    switch (family) {
        case CircuitFamily::Zeros:
            return zeros_circuit(g, fan_in);
        case CircuitFamily::Copy:
            return copy_circuit(g, fan_in);
        case CircuitFamily::Parity:
            return parity_circuit(g, fan_in);
        case CircuitFamily::Random:
            return random_layered_circuit(g, fan_in, depth, seed);
    }
    throw std::invalid_argument("unknown circuit family");
}

size_t max_backward_lightcone(const ClassicalCircuit &c) {
    size_t best = 0;
    for (const auto &cone : c.lightcones().backward) {
        best = std::max(best, cone.size());
    }
    return best;
}

}  // namespace gsswb
