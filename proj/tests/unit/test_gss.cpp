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

#include <cmath>
#include <set>

#include "gsswb/graph/coloring.hpp"
#include "gsswb/gss/gss.hpp"
#include "gsswb/stabilizer/statevector.hpp"
#include "support/oracles.hpp"

using namespace gsswb;

namespace {

std::set<std::string> oracle_support(const GssInstance &inst) {
    StateVector sv(inst.graph.num_vertices());
    sv.apply(psi_circuit(inst));
    std::set<std::string> out;
    for (const auto &z : sv.support()) {
        out.insert(z.to_string());
    }
    return out;
}

}  // namespace

TEST(gss, all_zero_input_gives_zero_output) {
    Rng rng(1);
    for (const auto &g : {cycle_graph(5), complete_graph(4), petersen_graph(), grid_graph(6, 7)}) {
        GssInstance inst(g);
        for (uint64_t seed = 0; seed < 5; seed++) {
            auto out = solve_quantum(inst, seed);
            EXPECT_TRUE(out.z.none());
            EXPECT_TRUE(verify(inst, out.z));
        }
        BitVec bad(g.num_vertices());
        bad.set(0);
        EXPECT_FALSE(verify(inst, bad));
    }
}

TEST(gss, single_vertex_y_basis_is_a_coin) {
    GssInstance inst(Graph(1), BitVec::from_string("1"), BitVec(0));
    std::set<std::string> seen;
    for (uint64_t seed = 0; seed < 64; seed++) {
        seen.insert(solve_quantum(inst, seed).z.to_string());
    }
    EXPECT_EQ(seen, (std::set<std::string>{"0", "1"}));
    EXPECT_EQ(oracle_support(inst), seen);
}

TEST(gss, k2_with_active_edge_is_uniform) {
    GssInstance inst(complete_graph(2), BitVec(2), BitVec::from_string("1"));
    std::map<std::string, int> counts;
    for (uint64_t seed = 0; seed < 4000; seed++) {
        counts[solve_quantum(inst, seed).z.to_string()]++;
    }
    ASSERT_EQ(counts.size(), 4u);
    for (const auto &[z, k] : counts) {
        EXPECT_NEAR(k, 1000, 4 * 28) << z;
    }
}

TEST(gss, tableau_support_matches_statevector_oracle) {
    Rng rng(2);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng.below(10);
        auto inst = random_instance(oracle::random_graph(n, 0.5, rng), rng);
        std::set<std::string> ours;
        for (const auto &z : psi_support(inst).enumerate()) {
            ours.insert(z.to_string());
        }
        EXPECT_EQ(ours, oracle_support(inst)) << instance_to_json(inst).dump();
    }
}

TEST(gss, sparse_activation_support_matches_oracle) {
    // Most vertices see no active edge, so the support splits into a tableau
    // part and independent single-qubit factors.
    Rng rng(12);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng.below(11);
        auto inst = random_instance(oracle::random_graph(n, 0.5, rng), rng, 0.5, 0.1);
        auto support = psi_support(inst);
        std::set<std::string> ours;
        for (const auto &z : support.enumerate()) {
            ours.insert(z.to_string());
        }
        EXPECT_EQ(ours.size(), size_t{1} << support.rank());
        EXPECT_EQ(ours, oracle_support(inst)) << instance_to_json(inst).dump();
    }
}

TEST(gss, coloring_order_does_not_change_support) {
    Rng rng(3);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + rng.below(9);
        auto inst = random_instance(oracle::random_graph(n, 0.5, rng), rng);
        StateVector a(n);
        a.apply(psi_circuit(inst, edge_color(inst.graph)));
        StateVector b(n);
        b.apply(psi_circuit(inst));
        for (size_t k = 0; k < a.amplitudes().size(); k++) {
            EXPECT_NEAR(std::abs(a.amplitudes()[k] - b.amplitudes()[k]), 0.0, 1e-12);
        }
    }
}

TEST(gss, closed_form_agrees_with_verifier) {
    Rng rng(4);
    for (int trial = 0; trial < 150; trial++) {
        size_t n = 1 + rng.below(40);
        auto inst = random_instance(oracle::random_graph(n, 3.0 / n, rng), rng);
        auto closed = oracle::closed_form_constraints(inst);
        GssVerifier verifier(inst);
        EXPECT_EQ(verifier.support().rank() + closed.rows.size(), n);
        for (int k = 0; k < 30; k++) {
            BitVec z(n);
            for (size_t v = 0; v < n; v++) {
                z.set(v, rng.coin());
            }
            if (k % 2 == 0) {
                z = verifier.support().sample(rng);
            }
            EXPECT_EQ(verifier(z), closed.contains(z));
        }
    }
}

TEST(gss, solve_verify_round_trip_both_sampling_paths) {
    Rng rng(5);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.below(200);
        auto g = oracle::random_bounded_degree_graph(n, 6, 4 * n, rng);
        auto inst = random_instance(g, rng);
        SolveOptions opts;
        opts.measure_cutoff = trial % 2 == 0 ? 2048 : 16;
        auto out = solve_quantum(inst, rng.next(), opts);
        ASSERT_TRUE(verify(inst, out.z)) << "trial " << trial;
        EXPECT_TRUE(oracle::closed_form_constraints(inst).contains(out.z));
    }
}

TEST(gss, sampling_paths_are_deterministic) {
    Rng rng(6);
    auto inst = random_instance(oracle::random_bounded_degree_graph(300, 5, 2000, rng), rng);
    for (size_t cutoff : {16, 4096}) {
        SolveOptions opts;
        opts.measure_cutoff = cutoff;
        EXPECT_EQ(solve_quantum(inst, 42, opts).z, solve_quantum(inst, 42, opts).z);
    }
}

TEST(gss, depth_report_accounting) {
    auto g = petersen_graph();
    auto d = plan_depth(g);
    EXPECT_LE(d.ccz_layers, 4u);
    EXPECT_GE(d.ccz_layers, 3u);
    EXPECT_EQ(d.total_layers, d.ccz_layers + 3);
    EXPECT_EQ(d.decomposed_layers, 2 + 5 * (d.ccz_layers + 1));
    EXPECT_EQ(d.gate_counts.at("H"), 20u);
    EXPECT_EQ(d.gate_counts.at("CCZ"), 15u);
    EXPECT_EQ(d.gate_counts.at("CS"), 10u);
    EXPECT_EQ(d.max_degree, 3u);
    // Fixed degree: layer count does not grow with the cycle length.
    auto small = plan_depth(product_k2(cycle_graph(10)).first);
    auto large = plan_depth(product_k2(cycle_graph(1000)).first);
    EXPECT_EQ(small.total_layers, large.total_layers);
}

TEST(gss, classical_depth_threshold_values) {
    EXPECT_NEAR(classical_depth_threshold(std::pow(3.0, 32), 3), 1.0, 1e-12);
    EXPECT_NEAR(classical_depth_threshold(std::pow(2.0, 64), 2), 2.0, 1e-12);
    EXPECT_NEAR(classical_depth_threshold(1e6, 4), 0.3114, 1e-4);
    EXPECT_THROW(classical_depth_threshold(1, 2), std::invalid_argument);
    EXPECT_THROW(classical_depth_threshold(10, 1), std::invalid_argument);
}

TEST(gss, wire_format_and_json_round_trip) {
    auto g = cycle_graph(4);
    auto inst = GssInstance::from_x(g, BitVec::from_string("10011010"));
    EXPECT_EQ(inst.x_vertex.to_string(), "1001");
    EXPECT_EQ(inst.x_edge.to_string(), "1010");
    EXPECT_EQ(inst.x().to_string(), "10011010");
    EXPECT_THROW(GssInstance::from_x(g, BitVec(7)), std::invalid_argument);
    EXPECT_THROW(GssInstance(g, BitVec(3), BitVec(4)), std::invalid_argument);
    auto back = instance_from_json(nlohmann::json::parse(instance_to_json(inst).dump()));
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.x(), inst.x());
    EXPECT_THROW(instance_from_json(nlohmann::json::parse(R"({"graph":{"n":2,"edges":[[0,1]]},"x_edge":"11"})")),
                 std::invalid_argument);
    EXPECT_THROW(instance_from_json(nlohmann::json::parse("[]")), std::invalid_argument);
    EXPECT_THROW(verify(inst, BitVec(3)), std::invalid_argument);
}

TEST(gss, subproblem_with_inactive_cut_keeps_outputs_valid) {
    Rng rng(7);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng.below(30);
        auto g = oracle::random_graph(n, 0.2, rng);
        auto inst = random_instance(g, rng);
        // Silence a random set D: its vertex bits and every incident edge bit.
        std::vector<Vertex> keep;
        std::vector<uint8_t> dropped(n, 0);
        for (Vertex v = 0; v < n; v++) {
            if (rng.below(3) == 0) {
                dropped[v] = 1;
                inst.x_vertex.set(v, false);
            } else {
                keep.push_back(v);
            }
        }
        for (EdgeId e = 0; e < g.num_edges(); e++) {
            if (dropped[g.edge(e).u] || dropped[g.edge(e).v]) {
                inst.x_edge.set(e, false);
            }
        }
        auto z = solve_quantum(inst, rng.next()).z;
        auto sub = subproblem(inst, keep);
        BitVec zs(keep.size());
        for (size_t i = 0; i < keep.size(); i++) {
            zs.set(i, z[sub.to_parent[i]]);
        }
        EXPECT_TRUE(verify(sub.instance, zs));
    }
}

TEST(gss, output_json_shape) {
    GssInstance inst(cycle_graph(3));
    auto j = output_to_json(solve_quantum(inst, 9));
    EXPECT_EQ(j.at("z"), "000");
    EXPECT_EQ(j.at("seed"), 9u);
    EXPECT_TRUE(j.at("depth").contains("total_layers"));
}
