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

#include "gsswb/graph/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gsswb {

static std::vector<Edge> to_edges(std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return edges;
}

Graph::Graph(size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n, to_edges(edges)) {
}

Graph::Graph(size_t n, std::vector<Edge> edges) {
    if (n >= kNoVertex) {
        throw std::invalid_argument("too many vertices");
    }
    for (auto &e : edges) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.v >= n) {
            throw std::invalid_argument(
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                std::to_string(n));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); i++) {
        if (edges[i] == edges[i - 1]) {
            throw std::invalid_argument(
                "duplicate edge {" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "}");
        }
    }
    edges_ = std::move(edges);

    offsets_.assign(n + 1, 0);
    for (const auto &e : edges_) {
        offsets_[e.u + 1]++;
        offsets_[e.v + 1]++;
    }
    for (size_t v = 0; v < n; v++) {
        offsets_[v + 1] += offsets_[v];
    }
    adj_.resize(2 * edges_.size());
    adj_edge_.resize(2 * edges_.size());
    std::vector<size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Canonical order visits every edge {a, v} with a < v before any edge
    // {v, b}, and each group in ascending partner order, so neighbor lists
    // come out sorted.
    for (EdgeId id = 0; id < edges_.size(); id++) {
        const auto &e = edges_[id];
        adj_[fill[e.u]] = e.v;
        adj_edge_[fill[e.u]++] = id;
        adj_[fill[e.v]] = e.u;
        adj_edge_[fill[e.v]++] = id;
    }
}

size_t Graph::max_degree() const {
    size_t m = 0;
    for (Vertex v = 0; v < num_vertices(); v++) {
        m = std::max(m, degree(v));
    }
    return m;
}

size_t Graph::min_degree() const {
    if (num_vertices() == 0) {
        return 0;
    }
    size_t m = SIZE_MAX;
    for (Vertex v = 0; v < num_vertices(); v++) {
        m = std::min(m, degree(v));
    }
    return m;
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
    if (a >= num_vertices() || b >= num_vertices()) {
        return std::nullopt;
    }
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) {
        return std::nullopt;
    }
    return incident_edges(a)[it - nb.begin()];
}

void Graph::check_vertex(Vertex v) const {
    if (v >= num_vertices()) {
        throw std::out_of_range(
            "vertex " + std::to_string(v) + " out of range for graph with " + std::to_string(num_vertices()) +
            " vertices");
    }
}

std::pair<Graph, K2Pairing> product_k2(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(2 * g.num_edges() + n);
    for (const auto &e : g.edges()) {
        edges.push_back({2 * e.u, 2 * e.v});
        edges.push_back({2 * e.u + 1, 2 * e.v + 1});
    }
    for (Vertex v = 0; v < n; v++) {
        edges.push_back({2 * v, 2 * v + 1});
    }
    K2Pairing p;
    p.pair.resize(2 * n);
    p.base_vertex.resize(2 * n);
    p.layer.resize(2 * n);
    for (Vertex v = 0; v < 2 * n; v++) {
        p.pair[v] = v ^ 1;
        p.base_vertex[v] = v >> 1;
        p.layer[v] = static_cast<uint8_t>(v & 1);
    }
    return {Graph(2 * n, std::move(edges)), std::move(p)};
}

std::string pairing_violation(const Graph &g, const K2Pairing &p) {
    size_t n = g.num_vertices();
    if (p.pair.size() != n || p.base_vertex.size() != n || p.layer.size() != n) {
        return "pairing arrays do not match vertex count";
    }
    for (Vertex v = 0; v < n; v++) {
        Vertex w = p.pair[v];
        if (w == kNoVertex) {
            continue;
        }
        if (w >= n) {
            return "pair of " + std::to_string(v) + " out of range";
        }
        if (w == v) {
            return "vertex " + std::to_string(v) + " paired with itself";
        }
        if (p.pair[w] != v) {
            return "pairing is not an involution at " + std::to_string(v);
        }
        if (!g.has_edge(v, w)) {
            return "pairing edge {" + std::to_string(v) + "," + std::to_string(w) + "} missing";
        }
        if (p.base_vertex[v] != p.base_vertex[w] || p.layer[v] == p.layer[w]) {
            return "paired vertices " + std::to_string(v) + "," + std::to_string(w) + " disagree on base/layer";
        }
    }
    return {};
}

K2Pairing restrict_pairing(const K2Pairing &p, const Subgraph &sub) {
    K2Pairing out;
    size_t m = sub.to_parent.size();
    out.pair.resize(m);
    out.base_vertex.resize(m);
    out.layer.resize(m);
    for (Vertex c = 0; c < m; c++) {
        Vertex parent = sub.to_parent[c];
        Vertex other = p.pair[parent];
        out.pair[c] = other == kNoVertex ? kNoVertex : sub.from_parent[other];
        out.base_vertex[c] = p.base_vertex[parent];
        out.layer[c] = p.layer[parent];
    }
    return out;
}

Graph base_graph(const Graph &product, const K2Pairing &p) {
    Vertex nb = 0;
    for (Vertex b : p.base_vertex) {
        nb = std::max(nb, b + 1);
    }
    std::vector<Edge> edges;
    for (const auto &e : product.edges()) {
        if (p.base_vertex[e.u] == p.base_vertex[e.v]) {
            continue;
        }
        Vertex a = p.base_vertex[e.u];
        Vertex b = p.base_vertex[e.v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(nb, std::move(edges));
}

Subgraph induced_subgraph(const Graph &g, std::span<const Vertex> keep) {
    size_t n = g.num_vertices();
    Subgraph sub;
    sub.from_parent.assign(n, kNoVertex);
    std::vector<uint8_t> mark(n, 0);
    for (Vertex v : keep) {
        g.check_vertex(v);
        if (mark[v]) {
            throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in subset");
        }
        mark[v] = 1;
    }
    for (Vertex v = 0; v < n; v++) {
        if (mark[v]) {
            sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
            sub.to_parent.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges()) {
        if (mark[e.u] && mark[e.v]) {
            edges.push_back({sub.from_parent[e.u], sub.from_parent[e.v]});
        }
    }
    sub.graph = Graph(sub.to_parent.size(), std::move(edges));
    return sub;
}

Subgraph remove_vertices(const Graph &g, std::span<const Vertex> removed) {
    std::vector<uint8_t> gone(g.num_vertices(), 0);
    for (Vertex v : removed) {
        g.check_vertex(v);
        gone[v] = 1;
    }
    VertexSet keep;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (!gone[v]) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<uint8_t> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; s++) {
        if (seen[s]) {
            continue;
        }
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph &g) {
    return connected_components(g).size() <= 1;
}

VertexSet external_neighborhood(const Graph &g, std::span<const Vertex> u) {
    std::vector<uint8_t> state(g.num_vertices(), 0);  // 1 = in U, 2 = neighbor
    for (Vertex v : u) {
        g.check_vertex(v);
        state[v] = 1;
    }
    VertexSet out;
    for (Vertex v : u) {
        for (Vertex w : g.neighbors(v)) {
            if (state[w] == 0) {
                state[w] = 2;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph grid_graph(size_t rows, size_t cols) {
    std::vector<Edge> edges;
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            Vertex v = static_cast<Vertex>(r * cols + c);
            if (c + 1 < cols) {
                edges.push_back({v, v + 1});
            }
            if (r + 1 < rows) {
                edges.push_back({v, static_cast<Vertex>(v + cols)});
            }
        }
    }
    return Graph(rows * cols, std::move(edges));
}

Graph cycle_graph(size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; v++) {
        edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; v++) {
        edges.push_back({v, v + 1});
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a + 1; b < n; b++) {
            edges.push_back({a, b});
        }
    }
    return Graph(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; i++) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph(10, std::move(edges));
}

std::vector<size_t> bfs_distances(const Graph &g, Vertex source) {
    g.check_vertex(source);
    std::vector<size_t> dist(g.num_vertices(), SIZE_MAX);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace gsswb
