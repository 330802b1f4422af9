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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gsswb {

using Vertex = uint32_t;
using EdgeId = uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
    Vertex u;  // u < v
    Vertex v;
    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 in compressed form.
///
/// Edges are numbered by lexicographic order of (min endpoint, max endpoint).
/// Neighbor lists are sorted, and incident_edges(v)[i] is the id of the edge
/// {v, neighbors(v)[i]}.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t n) : Graph(n, std::vector<Edge>{}) {
    }

    /// Throws std::invalid_argument on self-loops, duplicate edges, or
    /// endpoints out of range. Endpoint order within a pair is irrelevant.
    Graph(size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(size_t n, std::vector<Edge> edges);

    size_t num_vertices() const {
        return offsets_.empty() ? 0 : offsets_.size() - 1;
    }
    size_t num_edges() const {
        return edges_.size();
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
    }
    size_t degree(Vertex v) const {
        return offsets_[v + 1] - offsets_[v];
    }
    size_t max_degree() const;
    size_t min_degree() const;

    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const Edge &edge(EdgeId e) const {
        return edges_[e];
    }
    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
    bool has_edge(Vertex a, Vertex b) const {
        return edge_id(a, b).has_value();
    }

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
    }

   private:
    std::vector<size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::vector<EdgeId> adj_edge_;
    std::vector<Edge> edges_;
};

/// Pairing metadata of a product graph G x K2.
///
/// Product vertex 2b + l is the copy of base vertex b in layer l. pair[v] is
/// the other copy, or kNoVertex once a restriction has dropped it.
struct K2Pairing {
    std::vector<Vertex> pair;
    std::vector<Vertex> base_vertex;
    std::vector<uint8_t> layer;

    size_t size() const {
        return pair.size();
    }
};

/// An induced subgraph plus the maps between parent and child vertex ids.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // child id -> parent id
    std::vector<Vertex> from_parent;  // parent id -> child id or kNoVertex
};

using VertexSet = std::vector<Vertex>;

std::pair<Graph, K2Pairing> product_k2(const Graph &g);
/// Checks the involution and pairing-edge invariants; entries equal to
/// kNoVertex are skipped. Returns an empty string when valid.
std::string pairing_violation(const Graph &g, const K2Pairing &p);
/// Carries pairing metadata through an induced-subgraph restriction.
K2Pairing restrict_pairing(const K2Pairing &p, const Subgraph &sub);
/// Base graph of a product: vertices are base ids, edges are the in-layer
/// edges projected through base_vertex.
Graph base_graph(const Graph &product, const K2Pairing &p);

/// Keeps the listed vertices (any order, duplicates rejected); child ids follow
/// ascending parent id so the canonical edge order is preserved.
Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> keep);
Subgraph remove_vertices(const Graph &g, std::span<const Vertex> removed);

/// Components sorted by smallest member; each component is sorted ascending.
std::vector<VertexSet> connected_components(const Graph &g);
bool is_connected(const Graph &g);

/// {v not in U : v adjacent to some member of U}, sorted ascending.
VertexSet external_neighborhood(const Graph &g, std::span<const Vertex> u);

/// rows x cols grid; vertex (r, c) has id r * cols + c.
Graph grid_graph(size_t rows, size_t cols);
Graph cycle_graph(size_t n);
Graph path_graph(size_t n);
Graph complete_graph(size_t n);
Graph petersen_graph();

/// Breadth-first distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<size_t> bfs_distances(const Graph &g, Vertex source);

}  // namespace gsswb
