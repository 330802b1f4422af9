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

// Independent brute-force references used only by tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gsswb/common/rational.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/graph/graph.hpp"
#include "gsswb/gss/gss.hpp"

namespace gsswb::oracle {

/// Adjacency matrix as nested vectors.
inline std::vector<std::vector<int>> adjacency_matrix(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto &e : g.edges()) {
        m[e.u][e.v] = m[e.v][e.u] = 1;
    }
    return m;
}

/// |N(U)| for a subset given as a membership vector, computed from the matrix.
inline size_t boundary_size(const std::vector<std::vector<int>> &m, const std::vector<int> &in) {
    size_t n = m.size();
    size_t count = 0;
    for (size_t w = 0; w < n; w++) {
        if (in[w]) {
            continue;
        }
        for (size_t v = 0; v < n; v++) {
            if (in[v] && m[v][w]) {
                count++;
                break;
            }
        }
    }
    return count;
}

/// min |N(U)|/|U| over 1 <= |U| <= hi by direct enumeration.
inline Rational brute_min_ratio(const Graph &g, size_t lo, size_t hi) {
    auto m = adjacency_matrix(g);
    size_t n = g.num_vertices();
    bool have = false;
    Rational best;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        std::vector<int> in(n, 0);
        size_t size = 0;
        for (size_t v = 0; v < n; v++) {
            if ((mask >> v) & 1) {
                in[v] = 1;
                size++;
            }
        }
        if (size < lo || size > hi) {
            continue;
        }
        Rational r(static_cast<int64_t>(boundary_size(m, in)), static_cast<int64_t>(size));
        if (!have || r < best) {
            best = r;
            have = true;
        }
    }
    return best;
}

/// Lexicographically smallest adjacency string over all relabelings (n <= 8).
inline std::vector<int> canonical_form(const Graph &g) {
    size_t n = g.num_vertices();
    auto m = adjacency_matrix(g);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> code;
        for (size_t a = 0; a < n; a++) {
            for (size_t b = a + 1; b < n; b++) {
                code.push_back(m[perm[a]][perm[b]]);
            }
        }
        if (best.empty() || code < best) {
            best = code;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Erdos-Renyi style random simple graph with edge probability p.
inline Graph random_graph(size_t n, double p, Rng &rng) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a + 1; b < n; b++) {
            if (rng.unit() < p) {
                edges.push_back({a, b});
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// Random graph with every degree at most max_deg, built by rejection.
inline Graph random_bounded_degree_graph(size_t n, size_t max_deg, size_t attempts, Rng &rng) {
    std::vector<size_t> deg(n, 0);
    std::vector<Edge> edges;
    std::vector<std::vector<uint8_t>> used(n, std::vector<uint8_t>(n, 0));
    for (size_t t = 0; t < attempts && n >= 2; t++) {
        Vertex a = static_cast<Vertex>(rng.below(n));
        Vertex b = static_cast<Vertex>(rng.below(n));
        if (a == b || used[a][b] || deg[a] >= max_deg || deg[b] >= max_deg) {
            continue;
        }
        used[a][b] = used[b][a] = 1;
        deg[a]++;
        deg[b]++;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(n, std::move(edges));
}

/// Parity description of the support of psi_x derived by hand, independent of
/// the tableau code. With M = A_active + diag(x_V), each A in ker M gives the
/// Z-only stabilizer Z^A with sign (-1)^(|A & X1|/2 + |E_active(A)|), so the
/// support is {z : <A,z> = that sign bit for all A in a basis of ker M}.
struct ParityConstraints {
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;

    bool contains(const BitVec &z) const {
        for (size_t j = 0; j < rows.size(); j++) {
            int p = 0;
            for (size_t v = 0; v < rows[j].size(); v++) {
                p ^= rows[j][v] & static_cast<int>(z[v]);
            }
            if (p != rhs[j]) {
                return false;
            }
        }
        return true;
    }
};

inline ParityConstraints closed_form_constraints(const GssInstance &inst) {
    size_t n = inst.graph.num_vertices();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (EdgeId e = 0; e < inst.graph.num_edges(); e++) {
        if (inst.x_edge[e]) {
            const auto &ed = inst.graph.edge(e);
            m[ed.u][ed.v] = m[ed.v][ed.u] = 1;
        }
    }
    for (size_t v = 0; v < n; v++) {
        m[v][v] = inst.x_vertex[v];
    }
    // Gauss-Jordan to reduced row echelon form, then read off the kernel.
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; c++) {
        size_t p = rank;
        while (p < n && !m[p][c]) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(m[p], m[rank]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && m[r][c]) {
                for (size_t k = 0; k < n; k++) {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        pivot_col.push_back(static_cast<int>(c));
        rank++;
    }
    std::vector<int> is_pivot(n, 0);
    for (int c : pivot_col) {
        is_pivot[c] = 1;
    }
    ParityConstraints out;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<int> a(n, 0);
        a[f] = 1;
        for (size_t j = 0; j < rank; j++) {
            if (m[j][f]) {
                a[pivot_col[j]] = 1;
            }
        }
        size_t y_count = 0;
        for (size_t v = 0; v < n; v++) {
            y_count += a[v] && inst.x_vertex[v];
        }
        size_t inner_edges = 0;
        for (EdgeId e = 0; e < inst.graph.num_edges(); e++) {
            const auto &ed = inst.graph.edge(e);
            inner_edges += inst.x_edge[e] && a[ed.u] && a[ed.v];
        }
        out.rhs.push_back(static_cast<int>((y_count / 2 + inner_edges) & 1));
        out.rows.push_back(std::move(a));
    }
    return out;
}

}  // namespace gsswb::oracle
