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

#include "gsswb/lightcone/circuit.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace gsswb {

namespace {

std::vector<uint32_t> merge_sorted(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

ClassicalCircuit::Node ClassicalCircuit::add_input(const std::string &name) {
    if (!gates_.empty()) {
        throw std::logic_error("inputs must be declared before gates");
    }
    if (!input_lookup_.emplace(name, input_names_.size()).second) {
        throw std::invalid_argument("duplicate input name '" + name + "'");
    }
    input_names_.push_back(name);
    return static_cast<Node>(input_names_.size() - 1);
}

ClassicalCircuit::Node ClassicalCircuit::add_gate(std::vector<Node> inputs, std::vector<uint8_t> table,
                                                  std::string name) {
    if (inputs.size() > fan_in_) {
        throw std::invalid_argument("gate with " + std::to_string(inputs.size()) + " inputs exceeds fan-in " +
                                    std::to_string(fan_in_));
    }
    if (table.size() != (size_t{1} << inputs.size())) {
        throw std::invalid_argument("truth table needs " + std::to_string(size_t{1} << inputs.size()) + " entries");
    }
    for (auto &t : table) {
        if (t > 1) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
    }
    for (Node in : inputs) {
        if (in >= num_nodes()) {
            throw std::invalid_argument("gate reads node " + std::to_string(in) + " which is not yet defined");
        }
    }
    gates_.push_back({std::move(inputs), std::move(table), std::move(name)});
    return static_cast<Node>(num_nodes() - 1);
}

ClassicalCircuit::Node ClassicalCircuit::add_constant(bool value, std::string name) {
    return add_gate({}, {static_cast<uint8_t>(value)}, std::move(name));
}

void ClassicalCircuit::add_output(const std::string &name, Node source) {
    if (source >= num_nodes()) {
        throw std::invalid_argument("output '" + name + "' reads an undefined node");
    }
    if (!output_lookup_.emplace(name, outputs_.size()).second) {
        throw std::invalid_argument("duplicate output name '" + name + "'");
    }
    outputs_.push_back({name, source});
}

std::optional<size_t> ClassicalCircuit::input_index(const std::string &name) const {
    auto it = input_lookup_.find(name);
    if (it == input_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<size_t> ClassicalCircuit::output_index(const std::string &name) const {
    auto it = output_lookup_.find(name);
    if (it == output_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

uint32_t ClassicalCircuit::depth() const {
    std::vector<uint32_t> d(num_nodes(), 0);
    for (size_t g = 0; g < gates_.size(); g++) {
        uint32_t best = 0;
        for (Node in : gates_[g].inputs) {
            best = std::max(best, d[in] + 1);
        }
        d[num_inputs() + g] = best;
    }
    uint32_t out = 0;
    for (const auto &o : outputs_) {
        out = std::max(out, d[o.source]);
    }
    return out;
}

BitVec ClassicalCircuit::eval(const BitVec &inputs) const {
    if (inputs.size() != num_inputs()) {
        throw std::invalid_argument("circuit expects " + std::to_string(num_inputs()) + " input bits, got " +
                                    std::to_string(inputs.size()));
    }
    std::vector<uint8_t> v(num_nodes(), 0);
    for (size_t i = 0; i < num_inputs(); i++) {
        v[i] = inputs[i];
    }
    for (size_t g = 0; g < gates_.size(); g++) {
        const auto &gate = gates_[g];
        size_t idx = 0;
        for (size_t k = 0; k < gate.inputs.size(); k++) {
            idx |= size_t{v[gate.inputs[k]]} << k;
        }
        v[num_inputs() + g] = gate.table[idx];
    }
    BitVec out(outputs_.size());
    for (size_t j = 0; j < outputs_.size(); j++) {
        out.set(j, v[outputs_[j].source]);
    }
    return out;
}

ClassicalCircuit::Lightcones ClassicalCircuit::lightcones() const {
    std::vector<std::vector<uint32_t>> cone(num_nodes());
    for (size_t i = 0; i < num_inputs(); i++) {
        cone[i] = {static_cast<uint32_t>(i)};
    }
    for (size_t g = 0; g < gates_.size(); g++) {
        std::vector<uint32_t> acc;
        for (Node in : gates_[g].inputs) {
            acc = merge_sorted(acc, cone[in]);
        }
        cone[num_inputs() + g] = std::move(acc);
    }
    Lightcones lc;
    lc.forward.assign(num_inputs(), {});
    for (size_t j = 0; j < outputs_.size(); j++) {
        lc.backward.push_back(cone[outputs_[j].source]);
        for (uint32_t i : lc.backward.back()) {
            lc.forward[i].push_back(static_cast<uint32_t>(j));
        }
    }
    return lc;
}

std::vector<uint32_t> ClassicalCircuit::lightcone_backward(size_t output) const {
    if (output >= outputs_.size()) {
        throw std::out_of_range("no output with index " + std::to_string(output));
    }
    std::vector<uint8_t> seen(num_nodes(), 0);
    std::vector<Node> stack{outputs_[output].source};
    std::vector<uint32_t> out;
    seen[stack.back()] = 1;
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        if (is_input(n)) {
            out.push_back(n);
            continue;
        }
        for (Node in : gates_[n - num_inputs()].inputs) {
            if (!seen[in]) {
                seen[in] = 1;
                stack.push_back(in);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> ClassicalCircuit::lightcone_forward(size_t input) const {
    if (input >= num_inputs()) {
        throw std::out_of_range("no input with index " + std::to_string(input));
    }
    // Gates are topologically ordered, so one forward sweep marks every
    // node reachable from the input.
    std::vector<uint8_t> reach(num_nodes(), 0);
    reach[input] = 1;
    for (size_t g = 0; g < gates_.size(); g++) {
        for (Node in : gates_[g].inputs) {
            if (reach[in]) {
                reach[num_inputs() + g] = 1;
                break;
            }
        }
    }
    std::vector<uint32_t> out;
    for (size_t j = 0; j < outputs_.size(); j++) {
        if (reach[outputs_[j].source]) {
            out.push_back(static_cast<uint32_t>(j));
        }
    }
    return out;
}

ClassicalCircuit ClassicalCircuit::restrict(const std::map<size_t, bool> &fixed) const {
    for (const auto &[i, value] : fixed) {
        if (i >= num_inputs()) {
            throw std::out_of_range("cannot fix input " + std::to_string(i));
        }
    }
    ClassicalCircuit d(fan_in_);
    for (const auto &name : input_names_) {
        d.add_input(name);
    }
    // For every old node: either a constant value or a node of d.
    std::vector<int8_t> constant(num_nodes(), -1);
    std::vector<Node> mapped(num_nodes(), 0);
    for (size_t i = 0; i < num_inputs(); i++) {
        auto it = fixed.find(i);
        if (it != fixed.end()) {
            constant[i] = it->second;
        } else {
            mapped[i] = static_cast<Node>(i);
        }
    }
    for (size_t g = 0; g < gates_.size(); g++) {
        const auto &gate = gates_[g];
        Node self = static_cast<Node>(num_inputs() + g);
        std::vector<size_t> free_slots;
        size_t fixed_bits = 0;
        for (size_t k = 0; k < gate.inputs.size(); k++) {
            int8_t c = constant[gate.inputs[k]];
            if (c >= 0) {
                fixed_bits |= size_t(c) << k;
            } else {
                free_slots.push_back(k);
            }
        }
        if (free_slots.empty()) {
            constant[self] = static_cast<int8_t>(gate.table[fixed_bits]);
            continue;
        }
        std::vector<Node> ins;
        for (size_t k : free_slots) {
            ins.push_back(mapped[gate.inputs[k]]);
        }
        std::vector<uint8_t> table(size_t{1} << free_slots.size());
        for (size_t a = 0; a < table.size(); a++) {
            size_t idx = fixed_bits;
            for (size_t s = 0; s < free_slots.size(); s++) {
                idx |= ((a >> s) & 1) << free_slots[s];
            }
            table[a] = gate.table[idx];
        }
        mapped[self] = d.add_gate(std::move(ins), std::move(table), gate.name);
    }
    std::optional<Node> const_node[2];
    for (const auto &o : outputs_) {
        Node src;
        if (constant[o.source] >= 0) {
            int c = constant[o.source];
            if (!const_node[c]) {
                const_node[c] = d.add_constant(c != 0);
            }
            src = *const_node[c];
        } else {
            src = mapped[o.source];
        }
        d.add_output(o.name, src);
    }
    return d;
}

std::string ClassicalCircuit::violation() const {
    for (size_t g = 0; g < gates_.size(); g++) {
        const auto &gate = gates_[g];
        if (gate.inputs.size() > fan_in_) {
            return "gate " + std::to_string(g) + " exceeds fan-in";
        }
        if (gate.table.size() != (size_t{1} << gate.inputs.size())) {
            return "gate " + std::to_string(g) + " has a malformed truth table";
        }
        for (Node in : gate.inputs) {
            if (in >= num_inputs() + g) {
                return "gate " + std::to_string(g) + " is not in topological order";
            }
        }
    }
    for (const auto &o : outputs_) {
        if (o.source >= num_nodes()) {
            return "output " + o.name + " reads an undefined node";
        }
    }
    return {};
}

nlohmann::json ClassicalCircuit::to_json() const {
    auto ref = [&](Node n) {
        if (is_input(n)) {
            return input_names_[n];
        }
        size_t g = n - num_inputs();
        return gates_[g].name.empty() ? "g" + std::to_string(g) : gates_[g].name;
    };
    nlohmann::json gates = nlohmann::json::array();
    for (size_t g = 0; g < gates_.size(); g++) {
        nlohmann::json ins = nlohmann::json::array();
        for (Node in : gates_[g].inputs) {
            ins.push_back(ref(in));
        }
        std::string table;
        for (auto t : gates_[g].table) {
            table += static_cast<char>('0' + t);
        }
        gates.push_back({{"id", ref(static_cast<Node>(num_inputs() + g))}, {"inputs", ins}, {"table", table}});
    }
    nlohmann::json outs = nlohmann::json::array();
    for (const auto &o : outputs_) {
        outs.push_back({{"name", o.name}, {"source", ref(o.source)}});
    }
    return {{"fan_in", fan_in_}, {"inputs", input_names_}, {"gates", gates}, {"outputs", outs}};
}

ClassicalCircuit ClassicalCircuit::from_json(const nlohmann::json &j) {
    try {
        ClassicalCircuit c(j.at("fan_in").get<uint32_t>());
        std::unordered_map<std::string, Node> node_of;
        for (const auto &name : j.at("inputs")) {
            auto s = name.get<std::string>();
            node_of[s] = c.add_input(s);
        }
        const auto &gates = j.at("gates");
        std::unordered_map<std::string, size_t> gate_index;
        for (size_t g = 0; g < gates.size(); g++) {
            auto id = gates[g].at("id").get<std::string>();
            if (node_of.count(id) || !gate_index.emplace(id, g).second) {
                throw std::invalid_argument("duplicate node id '" + id + "'");
            }
        }
        // Kahn's algorithm, always taking the earliest ready gate in file order.
        std::vector<size_t> pending(gates.size(), 0);
        std::vector<std::vector<size_t>> readers(gates.size());
        for (size_t g = 0; g < gates.size(); g++) {
            for (const auto &in : gates[g].at("inputs")) {
                auto s = in.get<std::string>();
                if (node_of.count(s)) {
                    continue;
                }
                auto it = gate_index.find(s);
                if (it == gate_index.end()) {
                    throw std::invalid_argument("gate reads unknown node '" + s + "'");
                }
                pending[g]++;
                readers[it->second].push_back(g);
            }
        }
        std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
        for (size_t g = 0; g < gates.size(); g++) {
            if (pending[g] == 0) {
                ready.push(g);
            }
        }
        size_t placed = 0;
        while (!ready.empty()) {
            size_t g = ready.top();
            ready.pop();
            std::vector<Node> ins;
            for (const auto &in : gates[g].at("inputs")) {
                ins.push_back(node_of.at(in.get<std::string>()));
            }
            auto text = gates[g].at("table").get<std::string>();
            std::vector<uint8_t> table;
            for (char ch : text) {
                if (ch != '0' && ch != '1') {
                    throw std::invalid_argument("truth table must be a bit string");
                }
                table.push_back(static_cast<uint8_t>(ch - '0'));
            }
            auto id = gates[g].at("id").get<std::string>();
            node_of[id] = c.add_gate(std::move(ins), std::move(table), id);
            placed++;
            for (size_t r : readers[g]) {
                if (--pending[r] == 0) {
                    ready.push(r);
                }
            }
        }
        if (placed != gates.size()) {
            throw std::invalid_argument("circuit gates contain a cycle");
        }
        for (const auto &o : j.at("outputs")) {
            auto src = o.at("source").get<std::string>();
            auto it = node_of.find(src);
            if (it == node_of.end()) {
                throw std::invalid_argument("output reads unknown node '" + src + "'");
            }
            c.add_output(o.at("name").get<std::string>(), it->second);
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
    }
}

}  // namespace gsswb
