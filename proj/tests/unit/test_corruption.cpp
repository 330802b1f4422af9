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

#include <set>

#include "gsswb/common/errors.hpp"
#include "gsswb/corruption/corruption.hpp"
#include "gsswb/corruption/experiment.hpp"
#include "gsswb/expander/expander.hpp"
#include "gsswb/graph/expansion.hpp"
#include "support/oracles.hpp"

using namespace gsswb;

namespace {

Graph disjoint_union(const Graph &a, const Graph &b) {
    std::vector<Edge> edges = a.edges();
    auto off = static_cast<Vertex>(a.num_vertices());
    for (const auto &e : b.edges()) {
        edges.push_back({e.u + off, e.v + off});
    }
    return Graph(a.num_vertices() + b.num_vertices(), edges);
}

// Brute-force minor check used to cross-examine the validator: contract each
// branch set and look for every grid edge among the contracted edges.
bool contracted_has_grid(const Graph &g, const MinorEmbedding &m) {
    std::vector<int> owner(g.num_vertices(), -1);
    for (size_t i = 0; i < m.branch_sets.size(); i++) {
        for (Vertex v : m.branch_sets[i]) {
            owner[v] = static_cast<int>(i);
        }
    }
    std::set<std::pair<int, int>> quotient;
    for (const auto &e : g.edges()) {
        int a = owner[e.u], b = owner[e.v];
        if (a >= 0 && b >= 0 && a != b) {
            quotient.insert({std::min(a, b), std::max(a, b)});
        }
    }
    for (auto [a, b] : grid_edge_list(m.rows, m.cols)) {
        if (!quotient.count({int(std::min(a, b)), int(std::max(a, b))})) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(corrupt, examples) {
    CorruptionPlan none{0.0, CorruptionStrategy::Random, {}};
    auto g = random_regular_graph(50, 4, 1);
    EXPECT_EQ(corrupt(g, none, 9).graph, g);
    EXPECT_TRUE(none.removed.empty());

    CorruptionPlan one{0.25, CorruptionStrategy::ExplicitList, {0}};
    EXPECT_EQ(corrupt(cycle_graph(4), one, 0).graph, path_graph(3));

    CorruptionPlan hdf{0.25, CorruptionStrategy::HighDegreeFirst, {}};
    EXPECT_EQ(corrupt(complete_graph(4), hdf, 0).graph, complete_graph(3));
    EXPECT_EQ(hdf.removed, VertexSet{0});
}

TEST(corrupt, errors) {
    CorruptionPlan over{0.25, CorruptionStrategy::ExplicitList, {0, 1}};
    EXPECT_THROW(corrupt(cycle_graph(4), over, 0), std::invalid_argument);
    CorruptionPlan dup{0.5, CorruptionStrategy::ExplicitList, {1, 1}};
    EXPECT_THROW(corrupt(cycle_graph(4), dup, 0), std::invalid_argument);
    CorruptionPlan range{0.5, CorruptionStrategy::ExplicitList, {9}};
    EXPECT_THROW(corrupt(cycle_graph(4), range, 0), std::out_of_range);
    CorruptionPlan eps{1.0, CorruptionStrategy::Random, {}};
    EXPECT_THROW(corrupt(cycle_graph(4), eps, 0), std::invalid_argument);
    EXPECT_THROW(parse_strategy("worst"), std::invalid_argument);
    EXPECT_EQ(parse_strategy("greedy-boundary-min"), CorruptionStrategy::GreedyBoundaryMin);
}

TEST(corrupt, budget_and_determinism) {
    EXPECT_EQ(corruption_budget(100, 0.29), 29u);
    EXPECT_EQ(corruption_budget(1024, 0.01), 10u);
    auto g = random_regular_graph(2048, 8, 4);
    for (auto s : {CorruptionStrategy::Random, CorruptionStrategy::HighDegreeFirst,
                   CorruptionStrategy::GreedyBoundaryMin}) {
        for (double eps : {0.0, 0.01, 0.1}) {
            auto a = choose_removed(g, eps, s, 17);
            EXPECT_LE(a.size(), corruption_budget(2048, eps));
            EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
            EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end());
            EXPECT_EQ(a, choose_removed(g, eps, s, 17));
        }
    }
    EXPECT_EQ(choose_removed(g, 0.01, CorruptionStrategy::Random, 1).size(), 20u);
}

TEST(corrupt, high_degree_first_prefers_hubs) {
    // Star centre plus a path: the centre goes first, then degree-2 vertices by id.
    Graph g(7, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
    EXPECT_EQ(choose_removed(g, 0.3, CorruptionStrategy::HighDegreeFirst, 0), (VertexSet{0, 3}));
}

TEST(corrupt, greedy_boundary_cuts_a_bottleneck) {
    // Two cliques joined through one cut vertex: the adversary should take it.
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 10; a++) {
        for (Vertex b = a + 1; b < 10; b++) {
            edges.push_back({a, b});
            edges.push_back({a + 11, b + 11});
        }
    }
    edges.push_back({9, 10});
    edges.push_back({10, 11});
    auto removed = choose_removed(Graph(21, edges), 0.05, CorruptionStrategy::GreedyBoundaryMin, 3);
    EXPECT_EQ(removed, VertexSet{10});
}

TEST(giant, examples) {
    auto whole = giant_component(cycle_graph(6), 6);
    EXPECT_EQ(whole.vertices.size(), 6u);
    EXPECT_TRUE(whole.ok);

    auto g = disjoint_union(path_graph(3), cycle_graph(5));
    auto r = giant_component(g, 8);
    EXPECT_EQ(r.vertices, (VertexSet{3, 4, 5, 6, 7}));
    EXPECT_TRUE(r.ok);

    auto tie = giant_component(disjoint_union(cycle_graph(4), cycle_graph(4)), 8);
    EXPECT_EQ(tie.vertices, (VertexSet{0, 1, 2, 3}));
    EXPECT_FALSE(tie.ok);
}

TEST(giant_expansion, examples) {
    auto r = check_giant_expansion(complete_graph(3), Rational(1, 2), 4);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.lo, 1u);
    EXPECT_EQ(r.hi, 2u);
    EXPECT_EQ(*r.h_prime, Rational(1, 2));
    EXPECT_TRUE(r.passes);
    EXPECT_FALSE(check_giant_expansion(complete_graph(3), Rational(1), 4).passes);

    auto split = check_giant_expansion(disjoint_union(cycle_graph(4), cycle_graph(4)), Rational(0), 8);
    EXPECT_FALSE(split.giant_ok);
    EXPECT_FALSE(split.passes);

    auto g = random_regular_graph(1024, 8, 11);
    CorruptionPlan plan{0.01, CorruptionStrategy::Random, {}};
    auto big = check_giant_expansion(corrupt(g, plan, 5).graph, Rational(0), 1024);
    EXPECT_FALSE(big.exact);
    EXPECT_TRUE(big.giant_ok);
    EXPECT_GT(*big.h_lower, 0.0);
    EXPECT_TRUE(big.passes);
}

TEST(giant_expansion, small_expanders_keep_middle_expansion) {
    // Property: in exact mode, a giant flag with epsilon below h/6 leaves some h' > 0.
    Rng rng(20);
    int checked = 0;
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 8 + rng.below(13);
        auto g = oracle::random_graph(n, 0.5, rng);
        if (!is_connected(g)) {
            continue;
        }
        double h = expansion_ratio_exact(g).to_double();
        double eps = rng.unit() * h / 6.0;
        CorruptionPlan plan{eps, CorruptionStrategy::Random, {}};
        auto sub = corrupt(g, plan, rng.next());
        auto r = check_giant_expansion(sub.graph, Rational(0), n);
        if (r.giant_ok && r.h_prime) {
            EXPECT_GT(*r.h_prime, Rational(0));
            checked++;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(trim, examples) {
    auto k4 = trim_to_expander(complete_graph(4));
    EXPECT_TRUE(k4.removed.empty());
    EXPECT_EQ(k4.trimmed.graph, complete_graph(4));
    EXPECT_TRUE(k4.ok);

    auto p4 = trim_to_expander(path_graph(4));
    EXPECT_EQ(p4.removed, (VertexSet{0, 1}));
    EXPECT_EQ(p4.trimmed.graph, path_graph(2));
    EXPECT_FALSE(p4.size_ok);
    EXPECT_FALSE(p4.ok);

    auto c6 = trim_to_expander(cycle_graph(6), Rational(1, 3));
    EXPECT_TRUE(c6.removed.empty());
    EXPECT_TRUE(c6.ok);
    EXPECT_EQ(c6.h_prime, Rational(2, 3));

    EXPECT_THROW(trim_to_expander(cycle_graph(21)), SizeCapExceeded);
}

TEST(trim, result_meets_target) {
    Rng rng(21);
    for (int trial = 0; trial < 80; trial++) {
        size_t n = 3 + rng.below(12);
        auto g = oracle::random_graph(n, 0.3, rng);
        Rational target(1 + static_cast<int64_t>(rng.below(3)), 3);
        auto r = trim_to_expander(g, target);
        size_t m = r.trimmed.graph.num_vertices();
        EXPECT_EQ(m + r.removed.size(), n);
        if (m >= 2) {
            EXPECT_EQ(r.h_prime, oracle::brute_min_ratio(r.trimmed.graph, 1, m / 2));
            EXPECT_GE(r.h_prime, target);
        }
    }
}

TEST(minor, validator_rejects_broken_embeddings) {
    auto g = grid_graph(3, 3);
    MinorEmbedding m;
    m.rows = m.cols = 2;
    m.branch_sets = {{0}, {1}, {3}, {4}};
    m.edges = {{0, 1, {0, 1}}, {2, 3, {3, 4}}, {0, 2, {0, 3}}, {1, 3, {1, 4}}};
    EXPECT_TRUE(validate_minor_embedding(g, m));
    EXPECT_TRUE(contracted_has_grid(g, m));

    auto overlap = m;
    overlap.branch_sets[1] = {1, 0};
    EXPECT_FALSE(validate_minor_embedding(g, overlap));
    auto disconnected = m;
    disconnected.branch_sets[3] = {4, 8};
    EXPECT_FALSE(validate_minor_embedding(g, disconnected));
    auto missing = m;
    missing.edges.pop_back();
    EXPECT_FALSE(validate_minor_embedding(g, missing));
    auto fake = m;
    fake.edges[3].host = {1, 3};
    EXPECT_FALSE(validate_minor_embedding(g, fake));
    auto wrong_set = m;
    wrong_set.edges[0].host = {1, 2};
    EXPECT_FALSE(validate_minor_embedding(g, wrong_set));
}

TEST(minor, examples) {
    auto k4 = embed_grid_minor(complete_graph(4), 1);
    EXPECT_EQ(k4.rows, 2u);
    EXPECT_TRUE(validate_minor_embedding(complete_graph(4), k4));
    for (const auto &s : k4.branch_sets) {
        EXPECT_EQ(s.size(), 1u);
    }
    auto g5 = grid_graph(5, 5);
    auto m5 = embed_grid_minor(g5, 1);
    EXPECT_GE(m5.rows, 2u);
    EXPECT_TRUE(validate_minor_embedding(g5, m5));
    auto single = embed_grid_minor(Graph(1), 0);
    EXPECT_EQ(single.rows, 1u);
    EXPECT_THROW(embed_grid_minor(Graph(2), 0), std::invalid_argument);
    EXPECT_THROW(embed_grid_minor(Graph(), 0), std::invalid_argument);
}

TEST(minor, grid_hosts_reach_half_side) {
    for (auto [r, c] : std::vector<std::pair<size_t, size_t>>{{4, 4}, {6, 6}, {8, 5}, {10, 10}, {16, 12}, {20, 20}}) {
        auto g = grid_graph(r, c);
        auto m = embed_grid_minor(g, 7);
        EXPECT_TRUE(validate_minor_embedding(g, m));
        EXPECT_GE(2 * m.rows, std::min(r, c)) << r << "x" << c;
    }
}

TEST(minor, every_result_validates) {
    Rng rng(22);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 2 + rng.below(150);
        auto g = oracle::random_graph(n, 3.0 / double(n) + 0.02, rng);
        auto giant = giant_component(g, n);
        auto core = induced_subgraph(g, giant.vertices).graph;
        auto m = embed_grid_minor(core, rng.next());
        EXPECT_EQ(minor_violation(core, m), "");
        EXPECT_TRUE(contracted_has_grid(core, m));
    }
}

TEST(minor, expander_side_grows) {
    auto small = embed_grid_minor(random_regular_graph(256, 8, 1), 1);
    auto large = embed_grid_minor(random_regular_graph(4096, 8, 1), 1);
    EXPECT_GT(large.rows, small.rows);
    EXPECT_GE(large.rows, 16u);
    EXPECT_EQ(embed_grid_minor(random_regular_graph(1024, 8, 2), 3).branch_sets,
              embed_grid_minor(random_regular_graph(1024, 8, 2), 3).branch_sets);
}

TEST(experiment, trial_report_and_aggregation) {
    auto configs = sweep_configs(5, {256, 1024}, {CorruptionStrategy::Random, CorruptionStrategy::HighDegreeFirst}, 3,
                                 8, 0.01);
    ASSERT_EQ(configs.size(), 12u);
    auto reports = run_trials(configs, 2);
    auto again = run_trials(configs, 1);
    for (size_t i = 0; i < reports.size(); i++) {
        EXPECT_EQ(trial_to_json(reports[i]), trial_to_json(again[i]));
        EXPECT_TRUE(reports[i].giant_ok);
        EXPECT_TRUE(reports[i].minor_valid);
        EXPECT_FALSE(reports[i].runtime_ms);
    }
    auto j = trial_to_json(reports[0]);
    for (const char *key : {"seed", "n", "d", "epsilon", "strategy", "giant_ok", "t_grid", "h_lower", "runtime_ms"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_TRUE(j["runtime_ms"].is_null());
    EXPECT_TRUE(run_trial(configs[0], true).runtime_ms.has_value());

    auto rows = aggregate(reports);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].strategy, "high-degree-first");
    EXPECT_EQ(rows[0].n, 256u);
    EXPECT_EQ(rows[0].trials, 3u);
    auto slope = loglog_slope(rows, "random");
    ASSERT_TRUE(slope.has_value());
    EXPECT_GT(*slope, 0.2);
    auto csv = scaling_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "strategy,n,trials,giant_ok_rate,t_median,t_min,t_max");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(experiment, slope_of_exact_power_law) {
    std::vector<ScalingRow> rows;
    for (size_t n : {16, 256, 4096}) {
        rows.push_back({"x", n, 1, 1.0, std::pow(double(n), 0.25), 0, 0});
    }
    EXPECT_NEAR(*loglog_slope(rows, "x"), 0.25, 1e-12);
    EXPECT_FALSE(loglog_slope(rows, "y").has_value());
}
