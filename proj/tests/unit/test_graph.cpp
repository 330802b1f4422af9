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

#include "gsswb/common/errors.hpp"
#include "gsswb/graph/coloring.hpp"
#include "gsswb/graph/expansion.hpp"
#include "gsswb/graph/graph.hpp"
#include "gsswb/graph/io.hpp"
#include "support/oracles.hpp"

using namespace gsswb;

TEST(graph, rejects_loops_duplicates_and_out_of_range) {
    EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), std::invalid_argument);
}

TEST(graph, canonical_edge_ids_and_sorted_adjacency) {
    Graph g(4, std::vector<Edge>{{2, 3}, {1, 0}, {3, 0}, {1, 2}});
    ASSERT_EQ(g.num_edges(), 4u);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.edge(1), (Edge{0, 3}));
    EXPECT_EQ(g.edge(2), (Edge{1, 2}));
    EXPECT_EQ(g.edge(3), (Edge{2, 3}));
    for (Vertex v = 0; v < 4; v++) {
        auto nb = g.neighbors(v);
        EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
        for (size_t i = 0; i < nb.size(); i++) {
            EXPECT_EQ(g.edge_id(v, nb[i]), g.incident_edges(v)[i]);
        }
    }
    EXPECT_EQ(g.edge_id(3, 2), 3u);
    EXPECT_FALSE(g.edge_id(0, 2).has_value());
}

TEST(graph, json_round_trip_keeps_edge_ids) {
    Rng rng(1);
    for (int t = 0; t < 20; t++) {
        Graph g = oracle::random_graph(12, 0.3, rng);
        auto back = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
        EXPECT_EQ(back.graph, g);
        EXPECT_FALSE(back.pairing.has_value());
    }
    auto [p, pairing] = product_k2(cycle_graph(5));
    auto back = graph_from_json(graph_to_json(p, &pairing));
    ASSERT_TRUE(back.pairing.has_value());
    EXPECT_EQ(back.pairing->pair, pairing.pair);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")), std::invalid_argument);
}

TEST(graph, dot_export_lists_edges) {
    auto dot = graph_to_dot(path_graph(3));
    EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
    EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
}

TEST(product_k2, single_vertex_gives_k2) {
    auto [p, pairing] = product_k2(Graph(1));
    EXPECT_EQ(p.num_vertices(), 2u);
    EXPECT_EQ(p.num_edges(), 1u);
    EXPECT_EQ(pairing_violation(p, pairing), "");
}

TEST(product_k2, edge_gives_four_cycle) {
    auto [p, pairing] = product_k2(complete_graph(2));
    EXPECT_EQ(p.num_vertices(), 4u);
    EXPECT_EQ(p.num_edges(), 4u);
    EXPECT_EQ(oracle::canonical_form(p), oracle::canonical_form(cycle_graph(4)));
}

TEST(product_k2, triangle_gives_prism) {
    auto [p, pairing] = product_k2(cycle_graph(3));
    EXPECT_EQ(p.num_vertices(), 6u);
    EXPECT_EQ(p.num_edges(), 9u);
    // Hand-built triangular prism: triangles {0,1,2} and {3,4,5} with rungs i -- i+3.
    Graph prism(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_EQ(oracle::canonical_form(p), oracle::canonical_form(prism));
}

TEST(product_k2, layers_recover_input_and_counts_hold) {
    Rng rng(5);
    for (int t = 0; t < 40; t++) {
        size_t n = 2 + rng.below(6);
        Graph g = oracle::random_graph(n, 0.5, rng);
        auto [p, pairing] = product_k2(g);
        EXPECT_EQ(p.num_vertices(), 2 * n);
        EXPECT_EQ(p.num_edges(), 2 * g.num_edges() + n);
        EXPECT_EQ(pairing_violation(p, pairing), "");
        for (uint8_t layer : {0, 1}) {
            VertexSet keep;
            for (Vertex v = 0; v < 2 * n; v++) {
                if (pairing.layer[v] == layer) {
                    keep.push_back(v);
                }
            }
            auto sub = induced_subgraph(p, keep);
            EXPECT_EQ(oracle::canonical_form(sub.graph), oracle::canonical_form(g));
        }
        EXPECT_EQ(base_graph(p, pairing), g);
    }
}

TEST(product_k2, larger_layers_match_degree_sequence) {
    Rng rng(6);
    Graph g = oracle::random_graph(60, 0.1, rng);
    auto [p, pairing] = product_k2(g);
    VertexSet keep;
    for (Vertex v = 1; v < p.num_vertices(); v += 2) {
        keep.push_back(v);
    }
    auto sub = induced_subgraph(p, keep);
    EXPECT_EQ(sub.graph.num_edges(), g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        EXPECT_EQ(sub.graph.degree(v), g.degree(v));
    }
}

TEST(subgraph, induced_subgraph_maps_ids) {
    Graph g = cycle_graph(6);
    auto sub = induced_subgraph(g, VertexSet{4, 0, 1});
    EXPECT_EQ(sub.to_parent, (VertexSet{0, 1, 4}));
    EXPECT_EQ(sub.from_parent[4], 2u);
    EXPECT_EQ(sub.from_parent[2], kNoVertex);
    EXPECT_EQ(sub.graph.num_edges(), 1u);
    EXPECT_THROW(induced_subgraph(g, VertexSet{1, 1}), std::invalid_argument);
    auto pairing_sub = product_k2(g);
    auto s2 = induced_subgraph(pairing_sub.first, VertexSet{0, 1, 2});
    auto rp = restrict_pairing(pairing_sub.second, s2);
    EXPECT_EQ(rp.pair[0], 1u);
    EXPECT_EQ(rp.pair[2], kNoVertex);
    EXPECT_EQ(pairing_violation(s2.graph, rp), "");
}

TEST(components, sorted_by_smallest_member) {
    Graph g(7, std::vector<Edge>{{5, 6}, {0, 3}, {1, 2}});
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 4u);
    EXPECT_EQ(comps[0], (VertexSet{0, 3}));
    EXPECT_EQ(comps[1], (VertexSet{1, 2}));
    EXPECT_EQ(comps[2], (VertexSet{4}));
    EXPECT_EQ(comps[3], (VertexSet{5, 6}));
}

TEST(neighborhood, examples) {
    Graph c4 = cycle_graph(4);
    EXPECT_TRUE(external_neighborhood(c4, VertexSet{0, 1, 2, 3}).empty());
    EXPECT_EQ(external_neighborhood(c4, VertexSet{0}), (VertexSet{1, 3}));
    EXPECT_EQ(external_neighborhood(complete_graph(4), VertexSet{0, 2}), (VertexSet{1, 3}));
    EXPECT_THROW(external_neighborhood(c4, VertexSet{9}), std::out_of_range);
}

TEST(grid, shape) {
    Graph g = grid_graph(3, 4);
    EXPECT_EQ(g.num_vertices(), 12u);
    EXPECT_EQ(g.num_edges(), 3u * 3 + 2u * 4);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(0, 4));
    EXPECT_FALSE(g.has_edge(3, 4));
}

TEST(edge_color, examples) {
    auto k2 = edge_color(complete_graph(2));
    EXPECT_EQ(k2.num_colors, 1u);
    Graph p3 = path_graph(3);
    auto c = edge_color(p3);
    EXPECT_LE(c.num_colors, 3u);
    EXPECT_NE(c.color[0], c.color[1]);
    Graph pet = petersen_graph();
    auto cp = edge_color(pet);
    EXPECT_EQ(edge_coloring_violation(pet, cp), "");
    EXPECT_LE(cp.num_colors, 4u);
    EXPECT_EQ(edge_color(Graph(3)).num_colors, 0u);
}

TEST(edge_color, validator_catches_conflicts) {
    Graph p3 = path_graph(3);
    EdgeColoring bad{{0, 0}, 1};
    EXPECT_NE(edge_coloring_violation(p3, bad), "");
    EdgeColoring out_of_range{{0, 5}, 2};
    EXPECT_NE(edge_coloring_violation(p3, out_of_range), "");
}

TEST(edge_color, random_graphs_stay_within_vizing_bound) {
    Rng rng(17);
    for (int t = 0; t < 300; t++) {
        size_t n = 2 + rng.below(60);
        size_t max_deg = 1 + rng.below(12);
        Graph g = oracle::random_bounded_degree_graph(n, max_deg, n * max_deg, rng);
        auto c = edge_color(g);
        ASSERT_EQ(edge_coloring_violation(g, c), "") << "trial " << t;
        EXPECT_LE(c.num_colors, g.max_degree() + 1);
        EXPECT_GE(c.num_colors, g.max_degree());
    }
}

TEST(edge_color, dense_graphs) {
    for (size_t n = 2; n <= 12; n++) {
        Graph g = complete_graph(n);
        auto c = edge_color(g);
        EXPECT_EQ(edge_coloring_violation(g, c), "");
        EXPECT_LE(c.num_colors, n);
    }
}

TEST(expansion, examples) {
    EXPECT_EQ(expansion_ratio_exact(complete_graph(4)), Rational(1));
    EXPECT_EQ(expansion_ratio_exact(cycle_graph(6)), Rational(2, 3));
    Graph two_k2(4, std::vector<Edge>{{0, 1}, {2, 3}});
    EXPECT_EQ(expansion_ratio_exact(two_k2), Rational(0));
    EXPECT_EQ(expansion_ratio_exact(cycle_graph(8)), Rational(1, 2));
}

TEST(expansion, refuses_beyond_cap) {
    EXPECT_THROW(expansion_ratio_exact(cycle_graph(21)), SizeCapExceeded);
    EXPECT_THROW(expansion_ratio_exact(Graph(1)), std::invalid_argument);
}

TEST(expansion, agrees_with_brute_force_and_connectivity) {
    Rng rng(23);
    for (int t = 0; t < 60; t++) {
        size_t n = 2 + rng.below(9);
        Graph g = oracle::random_graph(n, 0.35, rng);
        Rational h = expansion_ratio_exact(g);
        EXPECT_EQ(h, oracle::brute_min_ratio(g, 1, n / 2));
        EXPECT_EQ(h > Rational(0), is_connected(g));
    }
}

TEST(expansion, profile_argmin_attains_minimum) {
    Graph g = petersen_graph();
    auto p = expansion_profile_exact(g);
    for (size_t k = 1; k <= 10; k++) {
        auto u = mask_to_vertices(p.argmin[k]);
        EXPECT_EQ(u.size(), k);
        EXPECT_EQ(external_neighborhood(g, u).size(), p.min_boundary[k]);
    }
}
