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

#include <gtest/gtest.h>

#include "gsswb/common/rng.hpp"
#include "gsswb/lightcone/circuit.hpp"

using namespace gsswb;

namespace {

// Layered random circuit: inputs, then `depth` layers of width `width` gates
// with random tables, each reading `fan_in` random nodes of the previous layer.
ClassicalCircuit layered(Rng &rng, size_t inputs, size_t width, size_t depth, uint32_t fan_in) {
    ClassicalCircuit c(fan_in);
    std::vector<ClassicalCircuit::Node> prev;
    for (size_t i = 0; i < inputs; i++) {
        prev.push_back(c.add_input("x" + std::to_string(i)));
    }
    for (size_t d = 0; d < depth; d++) {
        std::vector<ClassicalCircuit::Node> next;
        for (size_t w = 0; w < width; w++) {
            std::vector<ClassicalCircuit::Node> ins;
            for (uint32_t k = 0; k < fan_in; k++) {
                ins.push_back(prev[rng.below(prev.size())]);
            }
            std::vector<uint8_t> table(size_t{1} << fan_in);
            for (auto &t : table) {
                t = rng.coin();
            }
            next.push_back(c.add_gate(ins, table));
        }
        prev = next;
    }
    for (size_t j = 0; j < prev.size(); j++) {
        c.add_output("z" + std::to_string(j), prev[j]);
    }
    return c;
}

}  // namespace

TEST(circuit, identity_wire) {
    ClassicalCircuit c(1);
    auto x = c.add_input("x0");
    c.add_output("z0", x);
    EXPECT_EQ(c.lightcone_forward(0), (std::vector<uint32_t>{0}));
    EXPECT_EQ(c.lightcone_backward(0), (std::vector<uint32_t>{0}));
    EXPECT_EQ(c.depth(), 0u);
    EXPECT_EQ(c.eval(BitVec::from_string("1")).to_string(), "1");
}

TEST(circuit, complete_tree_lightcone_is_k_to_the_d) {
    for (uint32_t k : {2u, 3u}) {
        for (uint32_t d : {1u, 2u, 3u}) {
            ClassicalCircuit c(k);
            size_t leaves = 1;
            for (uint32_t i = 0; i < d; i++) {
                leaves *= k;
            }
            std::vector<ClassicalCircuit::Node> layer;
            for (size_t i = 0; i < leaves; i++) {
                layer.push_back(c.add_input("x" + std::to_string(i)));
            }
            while (layer.size() > 1) {
                std::vector<ClassicalCircuit::Node> next;
                for (size_t i = 0; i < layer.size(); i += k) {
                    std::vector<ClassicalCircuit::Node> ins(layer.begin() + i, layer.begin() + i + k);
                    next.push_back(c.add_gate(ins, std::vector<uint8_t>(size_t{1} << k, 0)));
                }
                layer = next;
            }
            c.add_output("z", layer[0]);
            EXPECT_EQ(c.lightcone_backward(0).size(), leaves);
            EXPECT_EQ(c.depth(), d);
        }
    }
}

TEST(circuit, constant_table_still_counts_its_wires) {
    ClassicalCircuit c(2);
    auto a = c.add_input("a");
    auto b = c.add_input("b");
    c.add_output("z", c.add_gate({a, b}, {0, 0, 0, 0}));
    EXPECT_EQ(c.lightcone_backward(0), (std::vector<uint32_t>{0, 1}));
    EXPECT_EQ(c.lightcone_forward(1), (std::vector<uint32_t>{0}));
}

TEST(circuit, lightcone_views_agree_and_obey_k_to_the_d) {
    Rng rng(1);
    for (int trial = 0; trial < 30; trial++) {
        uint32_t k = 1 + static_cast<uint32_t>(rng.below(3));
        size_t d = rng.below(4);
        auto c = layered(rng, 20, 15, d, k);
        auto cones = c.lightcones();
        size_t bound = 1;
        for (size_t i = 0; i < c.depth(); i++) {
            bound *= k;
        }
        for (size_t j = 0; j < c.outputs().size(); j++) {
            EXPECT_EQ(cones.backward[j], c.lightcone_backward(j));
            EXPECT_LE(cones.backward[j].size(), bound);
        }
        for (size_t i = 0; i < c.num_inputs(); i++) {
            EXPECT_EQ(cones.forward[i], c.lightcone_forward(i));
        }
    }
}

TEST(circuit, restriction_preserves_function_and_shrinks_lightcones) {
    Rng rng(2);
    for (int trial = 0; trial < 40; trial++) {
        auto c = layered(rng, 10, 8, 1 + rng.below(3), 2);
        std::map<size_t, bool> fixed;
        for (size_t i = 0; i < c.num_inputs(); i++) {
            if (rng.coin()) {
                fixed[i] = rng.coin();
            }
        }
        auto d = c.restrict(fixed);
        EXPECT_EQ(d.violation(), "");
        auto lc = c.lightcones();
        auto ld = d.lightcones();
        for (size_t j = 0; j < c.outputs().size(); j++) {
            EXPECT_TRUE(std::includes(lc.backward[j].begin(), lc.backward[j].end(), ld.backward[j].begin(),
                                      ld.backward[j].end()));
            for (auto i : ld.backward[j]) {
                EXPECT_EQ(fixed.count(i), 0u);
            }
        }
        for (int k = 0; k < 16; k++) {
            BitVec in(c.num_inputs());
            for (size_t i = 0; i < in.size(); i++) {
                in.set(i, rng.coin());
            }
            BitVec full = in;
            for (auto [i, v] : fixed) {
                full.set(i, v);
            }
            EXPECT_EQ(d.eval(in), c.eval(full));
        }
    }
}

TEST(circuit, json_round_trip_and_reordering) {
    Rng rng(3);
    auto c = layered(rng, 6, 4, 3, 2);
    auto j = c.to_json();
    auto back = ClassicalCircuit::from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.to_json(), j);
    // Reverse the gate list; parsing must restore a topological order.
    auto rev = j;
    std::reverse(rev["gates"].begin(), rev["gates"].end());
    auto again = ClassicalCircuit::from_json(rev);
    for (int k = 0; k < 10; k++) {
        BitVec in(6);
        for (size_t i = 0; i < 6; i++) {
            in.set(i, rng.coin());
        }
        EXPECT_EQ(again.eval(in), c.eval(in));
    }
}

TEST(circuit, rejects_malformed_input) {
    ClassicalCircuit c(2);
    auto a = c.add_input("a");
    EXPECT_THROW(c.add_gate({a, a, a}, std::vector<uint8_t>(8, 0)), std::invalid_argument);
    EXPECT_THROW(c.add_gate({a}, {0, 1, 0}), std::invalid_argument);
    EXPECT_THROW(c.add_gate({a, 7}, {0, 1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(c.add_input("a"), std::invalid_argument);
    EXPECT_THROW(c.lightcone_backward(0), std::out_of_range);
    auto cyclic = nlohmann::json::parse(R"({"fan_in":1,"inputs":[],"gates":[
        {"id":"p","inputs":["q"],"table":"01"},{"id":"q","inputs":["p"],"table":"01"}],"outputs":[]})");
    EXPECT_THROW(ClassicalCircuit::from_json(cyclic), std::invalid_argument);
    EXPECT_THROW(ClassicalCircuit::from_json(nlohmann::json::parse(R"({"inputs":[]})")), std::invalid_argument);
    auto unknown = nlohmann::json::parse(R"({"fan_in":1,"inputs":[],"gates":[],"outputs":[{"name":"z","source":"nope"}]})");
    EXPECT_THROW(ClassicalCircuit::from_json(unknown), std::invalid_argument);
}
