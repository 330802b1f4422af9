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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsswb/common/bitvec.hpp"
#include "json.hpp"

namespace gsswb {

/// Bounded fan-in Boolean circuit with named input and output bits.
///
/// Nodes 0..num_inputs()-1 are inputs; node num_inputs() + i is gate i. Gates
/// are stored in topological order. A gate with k inputs carries a truth table
/// of 2^k bits indexed by its input values with the first input as the least
/// significant bit. A gate with no inputs is a constant and has depth 0.
///
/// Naming conventions used across the workbench: "xv:<v>" vertex bits,
/// "xe:<e>" edge bits, "r:<k>" random bits, "z:<v>" outputs.
class ClassicalCircuit {
   public:
    using Node = uint32_t;

    struct Gate {
        std::vector<Node> inputs;
        std::vector<uint8_t> table;
        std::string name;
    };
    struct Output {
        std::string name;
        Node source;
    };

    explicit ClassicalCircuit(uint32_t fan_in = 2) : fan_in_(fan_in) {
    }

    /// Inputs must all be added before the first gate.
    Node add_input(const std::string &name);
    /// Throws std::invalid_argument on unknown sources, fan-in above K, or a
    /// table of the wrong length.
    Node add_gate(std::vector<Node> inputs, std::vector<uint8_t> table, std::string name = {});
    Node add_constant(bool value, std::string name = {});
    void add_output(const std::string &name, Node source);

    uint32_t fan_in() const {
        return fan_in_;
    }
    size_t num_inputs() const {
        return input_names_.size();
    }
    size_t num_gates() const {
        return gates_.size();
    }
    size_t num_nodes() const {
        return num_inputs() + num_gates();
    }
    const std::vector<std::string> &input_names() const {
        return input_names_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::vector<Output> &outputs() const {
        return outputs_;
    }
    bool is_input(Node n) const {
        return n < num_inputs();
    }

    std::optional<size_t> input_index(const std::string &name) const;
    std::optional<size_t> output_index(const std::string &name) const;

    /// Longest input-to-output path counted in gates with at least one input.
    uint32_t depth() const;
    /// Output values for the given input assignment (indexed like inputs).
    BitVec eval(const BitVec &inputs) const;

    /// Syntactic dependency sets: backward[j] is the sorted list of input
    /// indices with a path to output j; forward[i] the sorted output indices
    /// reachable from input i.
    struct Lightcones {
        std::vector<std::vector<uint32_t>> backward;
        std::vector<std::vector<uint32_t>> forward;
    };
    Lightcones lightcones() const;
    std::vector<uint32_t> lightcone_backward(size_t output) const;
    std::vector<uint32_t> lightcone_forward(size_t input) const;

    /// Circuit with the given inputs fixed to constants. Constants are folded
    /// into the gates that read them, so remaining gates only read free
    /// inputs or other non-constant gates. Inputs, outputs and names are kept
    /// (a fixed input stays declared but is no longer read).
    ClassicalCircuit restrict(const std::map<size_t, bool> &fixed) const;

    /// Empty if consistent; otherwise a description of the first problem.
    std::string violation() const;

    nlohmann::json to_json() const;
    /// Accepts gates in any order; throws std::invalid_argument on cycles,
    /// unknown references or malformed fields.
    static ClassicalCircuit from_json(const nlohmann::json &j);

   private:
    uint32_t fan_in_;
    std::vector<std::string> input_names_;
    std::vector<Gate> gates_;
    std::vector<Output> outputs_;
    std::unordered_map<std::string, size_t> input_lookup_;
    std::unordered_map<std::string, size_t> output_lookup_;
};

}  // namespace gsswb
