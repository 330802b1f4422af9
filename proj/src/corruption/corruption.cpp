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

#include "gsswb/corruption/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gsswb/common/errors.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/expander/expander.hpp"
#include "gsswb/graph/expansion.hpp"

namespace gsswb {

std::string_view strategy_name(CorruptionStrategy s) {
    switch (s) {
        case CorruptionStrategy::Random:
            return "random";
        case CorruptionStrategy::HighDegreeFirst:
            return "high-degree-first";
        case CorruptionStrategy::GreedyBoundaryMin:
            return "greedy-boundary-min";
        case CorruptionStrategy::ExplicitList:
            return "explicit-list";
    }
    return "?";
}

CorruptionStrategy parse_strategy(std::string_view name) {
    for (auto s : {CorruptionStrategy::Random, CorruptionStrategy::HighDegreeFirst,
                   CorruptionStrategy::GreedyBoundaryMin, CorruptionStrategy::ExplicitList}) {
        if (name == strategy_name(s)) {
            return s;
        }
    }
    throw std::invalid_argument("unknown corruption strategy '" + std::string(name) +
                                "' (random, high-degree-first, greedy-boundary-min, explicit-list)");
}

size_t corruption_budget(size_t n, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in [0, 1)");
    }
    return static_cast<size_t>(std::floor(epsilon * static_cast<double>(n) + 1e-9));
}

namespace {

VertexSet remove_random(const Graph &g, size_t budget, Rng &rng) {
    std::vector<Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), Vertex{0});
    // Partial Fisher-Yates: the first `budget` slots end up a uniform sample.
    for (size_t i = 0; i < budget; i++) {
        size_t j = i + static_cast<size_t>(rng.below(all.size() - i));
        std::swap(all[i], all[j]);
    }
    all.resize(budget);
    return all;
}

VertexSet remove_high_degree(const Graph &g, size_t budget) {
    std::vector<Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), Vertex{0});
    std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    all.resize(budget);
    return all;
}

// Rounds of kGreedySamples BFS balls with log-uniform sizes up to half the
// survivors. The kGreedyVoters balls of least |N(U)|/|U| vote for their
// boundary vertices and the most voted are removed, `batch` per round.
VertexSet remove_greedy_boundary(const Graph &g, size_t budget, Rng &rng) {
    size_t n = g.num_vertices();
    std::vector<uint8_t> alive(n, 1);
    std::vector<uint32_t> stamp(n, 0);
    std::vector<uint32_t> votes(n, 0);
    uint32_t epoch = 0;
    size_t batch = std::max<size_t>(1, budget / 16);
    VertexSet removed;

    struct Ball {
        size_t size;
        VertexSet boundary;
    };
    std::vector<Vertex> alive_list;
    std::vector<Vertex> queue;
    while (removed.size() < budget) {
        alive_list.clear();
        for (Vertex v = 0; v < n; v++) {
            if (alive[v]) {
                alive_list.push_back(v);
            }
        }
        if (alive_list.size() < 2) {
            break;
        }
        double log_max = std::log2(std::max<double>(1.0, static_cast<double>(alive_list.size()) / 2.0));
        std::vector<Ball> balls;
        for (size_t s = 0; s < kGreedySamples; s++) {
            Vertex center = alive_list[rng.below(alive_list.size())];
            auto target = static_cast<size_t>(std::exp2(rng.unit() * log_max));
            target = std::max<size_t>(1, target);
            epoch++;
            queue.clear();
            queue.push_back(center);
            stamp[center] = epoch;
            for (size_t head = 0; head < queue.size() && queue.size() < target; head++) {
                for (Vertex w : g.neighbors(queue[head])) {
                    if (alive[w] && stamp[w] != epoch) {
                        stamp[w] = epoch;
                        queue.push_back(w);
                        if (queue.size() == target) {
                            break;
                        }
                    }
                }
            }
            Ball ball{queue.size(), {}};
            uint32_t in_ball = epoch;
            epoch++;
            for (Vertex v : queue) {
                for (Vertex w : g.neighbors(v)) {
                    if (alive[w] && stamp[w] != in_ball && stamp[w] != epoch) {
                        stamp[w] = epoch;
                        ball.boundary.push_back(w);
                    }
                }
            }
            // A ball that swallowed its whole component has nothing to cut.
            if (!ball.boundary.empty()) {
                balls.push_back(std::move(ball));
            }
        }
        if (balls.empty()) {
            break;
        }
        std::vector<size_t> order(balls.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return balls[a].boundary.size() * balls[b].size < balls[b].boundary.size() * balls[a].size;
        });
        std::vector<Vertex> touched;
        for (size_t i = 0; i < std::min(kGreedyVoters, order.size()); i++) {
            for (Vertex w : balls[order[i]].boundary) {
                if (votes[w]++ == 0) {
                    touched.push_back(w);
                }
            }
        }
        std::sort(touched.begin(), touched.end(), [&](Vertex a, Vertex b) {
            return votes[a] != votes[b] ? votes[a] > votes[b] : a < b;
        });
        size_t take = std::min({batch, budget - removed.size(), touched.size()});
        for (size_t i = 0; i < take; i++) {
            alive[touched[i]] = 0;
            removed.push_back(touched[i]);
        }
        for (Vertex w : touched) {
            votes[w] = 0;
        }
    }
    return removed;
}

}  // namespace

VertexSet choose_removed(const Graph &g, double epsilon, CorruptionStrategy strategy, uint64_t seed) {
    size_t budget = corruption_budget(g.num_vertices(), epsilon);
    Rng rng(derive_seed(seed, "corrupt"));
    VertexSet out;
    switch (strategy) {
        case CorruptionStrategy::Random:
            out = remove_random(g, budget, rng);
            break;
        case CorruptionStrategy::HighDegreeFirst:
            out = remove_high_degree(g, budget);
            break;
        case CorruptionStrategy::GreedyBoundaryMin:
            out = remove_greedy_boundary(g, budget, rng);
            break;
        case CorruptionStrategy::ExplicitList:
            throw std::invalid_argument("explicit-list corruption needs a caller-supplied vertex list");
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgraph corrupt(const Graph &g, CorruptionPlan &plan, uint64_t seed) {
    size_t budget = corruption_budget(g.num_vertices(), plan.epsilon);
    if (plan.strategy != CorruptionStrategy::ExplicitList) {
        plan.removed = choose_removed(g, plan.epsilon, plan.strategy, seed);
    } else {
        std::sort(plan.removed.begin(), plan.removed.end());
        if (std::adjacent_find(plan.removed.begin(), plan.removed.end()) != plan.removed.end()) {
            throw std::invalid_argument("explicit removal list repeats a vertex");
        }
        for (Vertex v : plan.removed) {
            g.check_vertex(v);
        }
        if (plan.removed.size() > budget) {
            throw std::invalid_argument("explicit removal list has " + std::to_string(plan.removed.size()) +
                                        " vertices, budget floor(epsilon n) is " + std::to_string(budget));
        }
    }
    return remove_vertices(g, plan.removed);
}

GiantComponent giant_component(const Graph &g, size_t original_n) {
    GiantComponent out;
    for (auto &comp : connected_components(g)) {
        if (comp.size() > out.vertices.size()) {
            out.vertices = std::move(comp);
        }
    }
    out.ok = 2 * out.vertices.size() > original_n;
    return out;
}

GiantExpansionReport check_giant_expansion(const Graph &g, const Rational &target, size_t original_n) {
    GiantExpansionReport r;
    r.original_n = original_n;
    r.target = target;
    auto giant = giant_component(g, original_n);
    r.giant_size = giant.vertices.size();
    r.giant_ok = giant.ok;
    auto sub = induced_subgraph(g, giant.vertices);
    size_t c = r.giant_size;
    r.lo = (c + 2) / 3;
    r.hi = 2 * c / 3;
    if (c <= kExactVertexCap) {
        r.exact = true;
        if (r.lo > r.hi || c == 0) {
            r.passes = r.giant_ok;
            return r;
        }
        auto profile = expansion_profile_exact(sub.graph);
        r.h_prime = profile.min_ratio(r.lo, r.hi).first;
        r.passes = r.giant_ok && *r.h_prime >= target;
    } else {
        r.h_lower = spectral_h_lower(sub.graph);
        r.passes = r.giant_ok && *r.h_lower > 0;
    }
    return r;
}

TrimResult trim_to_expander(const Graph &g, const Rational &target) {
    size_t n = g.num_vertices();
    if (n > kExactVertexCap) {
        throw SizeCapExceeded("trim_to_expander", n, kExactVertexCap);
    }
    TrimResult out;
    std::vector<uint8_t> gone(n, 0);
    auto current = [&]() {
        VertexSet keep;
        for (Vertex v = 0; v < n; v++) {
            if (!gone[v]) {
                keep.push_back(v);
            }
        }
        return induced_subgraph(g, keep);
    };
    Subgraph cur = current();
    while (cur.graph.num_vertices() >= 2) {
        auto profile = expansion_profile_exact(cur.graph);
        auto [ratio, k] = profile.min_ratio(1, cur.graph.num_vertices() / 2);
        if (ratio >= target) {
            break;
        }
        for (Vertex v : mask_to_vertices(profile.argmin[k])) {
            gone[cur.to_parent[v]] = 1;
            out.removed.push_back(cur.to_parent[v]);
        }
        cur = current();
    }
    std::sort(out.removed.begin(), out.removed.end());
    size_t m = cur.graph.num_vertices();
    out.h_prime = m >= 2 ? expansion_profile_exact(cur.graph).min_ratio(1, m / 2).first : Rational(0);
    out.trimmed = std::move(cur);
    out.size_ok = 3 * out.removed.size() < n;
    out.ok = out.size_ok && out.h_prime > Rational(0);
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> grid_edge_list(size_t rows, size_t cols) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c + 1 < cols; c++) {
            out.emplace_back(static_cast<uint32_t>(r * cols + c), static_cast<uint32_t>(r * cols + c + 1));
        }
    }
    for (size_t r = 0; r + 1 < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            out.emplace_back(static_cast<uint32_t>(r * cols + c), static_cast<uint32_t>((r + 1) * cols + c));
        }
    }
    return out;
}

std::string minor_violation(const Graph &g, const MinorEmbedding &m) {
    size_t n = g.num_vertices();
    size_t cells = m.rows * m.cols;
    if (cells == 0) {
        return "grid has no vertices";
    }
    if (m.branch_sets.size() != cells) {
        return "expected " + std::to_string(cells) + " branch sets, got " + std::to_string(m.branch_sets.size());
    }
    std::vector<int64_t> owner(n, -1);
    for (size_t i = 0; i < cells; i++) {
        const auto &set = m.branch_sets[i];
        if (set.empty()) {
            return "branch set " + std::to_string(i) + " is empty";
        }
        for (Vertex v : set) {
            if (v >= n) {
                return "branch set " + std::to_string(i) + " names vertex " + std::to_string(v) + " outside the host";
            }
            if (owner[v] != -1) {
                return "vertex " + std::to_string(v) + " lies in branch sets " + std::to_string(owner[v]) + " and " +
                       std::to_string(i);
            }
            owner[v] = static_cast<int64_t>(i);
        }
    }
    // Connectivity of each branch set inside the host.
    std::vector<uint8_t> seen(n, 0);
    std::vector<Vertex> stack;
    for (size_t i = 0; i < cells; i++) {
        const auto &set = m.branch_sets[i];
        size_t reached = 1;
        seen[set[0]] = 1;
        stack.assign(1, set[0]);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (owner[w] == static_cast<int64_t>(i) && !seen[w]) {
                    seen[w] = 1;
                    reached++;
                    stack.push_back(w);
                }
            }
        }
        if (reached != set.size()) {
            return "branch set " + std::to_string(i) + " is not connected";
        }
    }
    auto want = grid_edge_list(m.rows, m.cols);
    if (m.edges.size() != want.size()) {
        return "expected " + std::to_string(want.size()) + " grid edge witnesses, got " +
               std::to_string(m.edges.size());
    }
    std::vector<std::pair<uint32_t, uint32_t>> have;
    for (const auto &e : m.edges) {
        if (e.host.u >= n || e.host.v >= n || !g.has_edge(e.host.u, e.host.v)) {
            return "witness for grid edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " is not a host edge";
        }
        if (owner[e.host.u] != static_cast<int64_t>(e.a) || owner[e.host.v] != static_cast<int64_t>(e.b)) {
            return "witness for grid edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                   " does not join the two branch sets";
        }
        have.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    }
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) {
        return "grid edge witnesses do not cover the grid edges exactly once";
    }
    return "";
}

bool validate_minor_embedding(const Graph &g, const MinorEmbedding &m) {
    return minor_violation(g, m).empty();
}

namespace {

// Two BFS-derived coordinates: with a, c far apart, rho = d_a + d_c and
// kappa = d_a - d_c act as row and column on grid-like hosts.
struct Coordinates {
    std::vector<int64_t> rho;
    std::vector<int64_t> kappa;
};

Vertex farthest(const std::vector<size_t> &dist) {
    Vertex best = 0;
    for (Vertex v = 1; v < dist.size(); v++) {
        if (dist[v] > dist[best]) {
            best = v;
        }
    }
    return best;
}

Coordinates coordinates(const Graph &g) {
    Vertex a = farthest(bfs_distances(g, 0));
    auto da = bfs_distances(g, a);
    auto db = bfs_distances(g, farthest(da));
    Vertex c = 0;
    for (Vertex v = 1; v < g.num_vertices(); v++) {
        if (std::min(da[v], db[v]) > std::min(da[c], db[c])) {
            c = v;
        }
    }
    auto dc = bfs_distances(g, c);
    Coordinates out;
    out.rho.resize(g.num_vertices());
    out.kappa.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        out.rho[v] = static_cast<int64_t>(da[v] + dc[v]);
        out.kappa[v] = static_cast<int64_t>(da[v]) - static_cast<int64_t>(dc[v]);
    }
    return out;
}

// Splits candidates into t bands by rho and each band into t slots by kappa.
// Labels every candidate with its (band, slot) and picks per cell
// (row-major) the member nearest the cell's median point.
struct CellMap {
    std::vector<uint32_t> band;
    std::vector<uint32_t> slot;
    std::vector<Vertex> reps;
};

// Cut points splitting a key-sorted run into t nonempty parts. Keeps equal
// keys together (each level goes to the part holding its midpoint) whenever
// that leaves no part empty, else falls back to equal counts.
template <typename Key>
std::vector<size_t> split_points(const std::vector<Vertex> &sorted, size_t begin, size_t end, size_t t, Key key) {
    size_t m = end - begin;
    std::vector<size_t> cuts(t + 1, end);
    cuts[0] = begin;
    size_t part = 0;
    for (size_t i = begin; i < end;) {
        size_t j = i;
        while (j < end && key(sorted[j]) == key(sorted[i])) {
            j++;
        }
        size_t want = std::min(t - 1, t * ((i - begin) + (j - i) / 2) / m);
        while (part < want) {
            cuts[++part] = i;
        }
        i = j;
    }
    bool nonempty = part == t - 1;
    for (size_t k = 0; k < t && nonempty; k++) {
        nonempty = cuts[k] < cuts[k + 1];
    }
    if (!nonempty) {
        for (size_t k = 0; k <= t; k++) {
            cuts[k] = begin + k * m / t;
        }
    }
    return cuts;
}

CellMap partition_cells(std::vector<Vertex> cand, size_t t, const Coordinates &xy) {
    size_t m = cand.size();
    CellMap out;
    out.band.assign(xy.rho.size(), UINT32_MAX);
    out.slot.assign(xy.rho.size(), UINT32_MAX);
    out.reps.reserve(t * t);
    std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
        return std::tie(xy.rho[a], xy.kappa[a], a) < std::tie(xy.rho[b], xy.kappa[b], b);
    });
    auto band_cuts = split_points(cand, 0, m, t, [&](Vertex v) { return xy.rho[v]; });
    for (size_t r = 0; r < t; r++) {
        if (band_cuts[r + 1] - band_cuts[r] < t) {
            for (size_t k = 0; k <= t; k++) {
                band_cuts[k] = k * m / t;
            }
            break;
        }
    }
    for (size_t r = 0; r < t; r++) {
        std::vector<Vertex> band(cand.begin() + static_cast<ptrdiff_t>(band_cuts[r]),
                                 cand.begin() + static_cast<ptrdiff_t>(band_cuts[r + 1]));
        std::sort(band.begin(), band.end(), [&](Vertex a, Vertex b) {
            return std::tie(xy.kappa[a], xy.rho[a], a) < std::tie(xy.kappa[b], xy.rho[b], b);
        });
        auto slot_cuts = split_points(band, 0, band.size(), t, [&](Vertex v) { return xy.kappa[v]; });
        for (size_t c = 0; c < t; c++) {
            size_t lo = slot_cuts[c];
            size_t hi = slot_cuts[c + 1];
            std::vector<int64_t> rs, ks;
            for (size_t i = lo; i < hi; i++) {
                out.band[band[i]] = static_cast<uint32_t>(r);
                out.slot[band[i]] = static_cast<uint32_t>(c);
                rs.push_back(xy.rho[band[i]]);
                ks.push_back(xy.kappa[band[i]]);
            }
            std::nth_element(rs.begin(), rs.begin() + static_cast<ptrdiff_t>(rs.size() / 2), rs.end());
            std::nth_element(ks.begin(), ks.begin() + static_cast<ptrdiff_t>(ks.size() / 2), ks.end());
            int64_t mr = rs[rs.size() / 2];
            int64_t mk = ks[ks.size() / 2];
            Vertex best = band[lo];
            int64_t best_d = -1;
            for (size_t i = lo; i < hi; i++) {
                Vertex v = band[i];
                int64_t d = std::abs(xy.rho[v] - mr) + std::abs(xy.kappa[v] - mk);
                if (best_d < 0 || d < best_d) {
                    best = v;
                    best_d = d;
                }
            }
            out.reps.push_back(best);
        }
    }
    return out;
}

// Greedy far-apart selection: each new landmark is a vertex farthest from
// the ones already chosen. Distances are maintained by pruned BFS and the
// argmax by lazily cleaned distance buckets.
std::vector<Vertex> far_apart(const Graph &g, size_t count, Vertex first) {
    size_t n = g.num_vertices();
    constexpr uint32_t kInf = UINT32_MAX;
    std::vector<uint32_t> dist(n, kInf);
    std::vector<uint8_t> chosen(n, 0);
    std::vector<std::vector<Vertex>> buckets;
    std::vector<Vertex> out;
    std::vector<Vertex> queue;
    Vertex next = first;
    while (true) {
        out.push_back(next);
        chosen[next] = 1;
        dist[next] = 0;
        queue.assign(1, next);
        for (size_t head = 0; head < queue.size(); head++) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (dist[u] + 1 < dist[w]) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                    if (buckets.size() <= dist[w]) {
                        buckets.resize(dist[w] + 1);
                    }
                    buckets[dist[w]].push_back(w);
                }
            }
        }
        if (out.size() == count) {
            return out;
        }
        next = kNoVertex;
        while (!buckets.empty() && next == kNoVertex) {
            auto &top = buckets.back();
            uint32_t level = static_cast<uint32_t>(buckets.size() - 1);
            while (!top.empty()) {
                Vertex v = top.back();
                top.pop_back();
                if (!chosen[v] && dist[v] == level) {
                    next = v;
                    break;
                }
            }
            if (next == kNoVertex) {
                buckets.pop_back();
            }
        }
        if (next == kNoVertex) {
            return out;  // fewer vertices than requested
        }
    }
}

class Router {
   public:
    explicit Router(const Graph &g) : g_(g), stamp_(g.num_vertices(), 0), side_(g.num_vertices(), 0),
                                      parent_(g.num_vertices(), kNoVertex) {
    }

    // Routes every grid edge between the given landmarks, or nullopt. Each
    // route first stays inside its band (horizontal edges) or its slot in
    // the two bands (vertical edges) and falls back to the whole graph.
    std::optional<MinorEmbedding> run(const std::vector<Vertex> &landmarks, size_t t, const CellMap &regions) {
        owner_.assign(g_.num_vertices(), -1);
        MinorEmbedding m;
        m.rows = m.cols = t;
        m.branch_sets.assign(t * t, {});
        for (size_t i = 0; i < landmarks.size(); i++) {
            owner_[landmarks[i]] = static_cast<int32_t>(i);
            m.branch_sets[i].push_back(landmarks[i]);
        }
        for (auto [a, b] : grid_edge_list(t, t)) {
            uint32_t ra = a / static_cast<uint32_t>(t);
            uint32_t ca = a % static_cast<uint32_t>(t);
            bool horizontal = b == a + 1;
            auto inside = [&](Vertex w) {
                if (horizontal) {
                    return regions.band[w] == ra;
                }
                return (regions.band[w] == ra || regions.band[w] == ra + 1) && regions.slot[w] == ca;
            };
            auto host = route(m, a, b, inside);
            if (!host) {
                host = route(m, a, b, [](Vertex) { return true; });
            }
            if (!host) {
                return std::nullopt;
            }
            m.edges.push_back({a, b, *host});
        }
        for (auto &set : m.branch_sets) {
            std::sort(set.begin(), set.end());
        }
        return m;
    }

   private:
    // Bidirectional BFS from branch set a (side 0) and b (side 1) through
    // free vertices, expanding the smaller frontier one level at a time.
    template <typename Allowed>
    std::optional<Edge> route(MinorEmbedding &m, uint32_t a, uint32_t b, Allowed allowed) {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        std::vector<Vertex> frontier[2];
        for (int s = 0; s < 2; s++) {
            for (Vertex v : m.branch_sets[s == 0 ? a : b]) {
                stamp_[v] = epoch_;
                side_[v] = static_cast<uint8_t>(s);
                parent_[v] = kNoVertex;
                frontier[s].push_back(v);
            }
        }
        std::vector<Vertex> next;
        while (!frontier[0].empty() && !frontier[1].empty()) {
            int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
            next.clear();
            for (Vertex u : frontier[s]) {
                for (Vertex w : g_.neighbors(u)) {
                    if (stamp_[w] == epoch_) {
                        if (side_[w] != s) {
                            Vertex p0 = s == 0 ? u : w;
                            Vertex p1 = s == 0 ? w : u;
                            claim(m, p0, a);
                            claim(m, p1, b);
                            return Edge{p0, p1};
                        }
                        continue;
                    }
                    if (owner_[w] != -1 || !allowed(w)) {
                        continue;
                    }
                    stamp_[w] = epoch_;
                    side_[w] = static_cast<uint8_t>(s);
                    parent_[w] = u;
                    next.push_back(w);
                }
            }
            std::swap(frontier[s], next);
        }
        return std::nullopt;
    }

    // Adds the free vertices on the parent chain from v to branch set i.
    void claim(MinorEmbedding &m, Vertex v, uint32_t i) {
        for (; v != kNoVertex && owner_[v] == -1; v = parent_[v]) {
            owner_[v] = static_cast<int32_t>(i);
            m.branch_sets[i].push_back(v);
        }
    }

    const Graph &g_;
    std::vector<uint32_t> stamp_;
    std::vector<uint8_t> side_;
    std::vector<Vertex> parent_;
    std::vector<int32_t> owner_;
    uint32_t epoch_ = 0;
};

MinorEmbedding single_vertex() {
    MinorEmbedding m;
    m.rows = m.cols = 1;
    m.branch_sets = {{0}};
    return m;
}

std::optional<MinorEmbedding> try_side(const Graph &g, size_t t, uint64_t seed, const Coordinates &xy,
                                       Router &router) {
    size_t n = g.num_vertices();
    if (t == 0 || t * t > n) {
        return std::nullopt;
    }
    if (t == 1) {
        return single_vertex();
    }
    Rng rng(derive_seed(seed, "landmark", t));
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    auto regions = partition_cells(std::move(all), t, xy);
    auto spread = far_apart(g, t * t, static_cast<Vertex>(rng.below(n)));
    if (spread.size() == t * t) {
        if (auto m = router.run(partition_cells(spread, t, xy).reps, t, regions)) {
            return m;
        }
    }
    return router.run(regions.reps, t, regions);
}

void require_connected_host(const Graph &g) {
    if (g.num_vertices() == 0) {
        throw std::invalid_argument("grid minor search needs a nonempty host graph");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("grid minor search needs a connected host graph");
    }
}

void check_result(const Graph &g, const MinorEmbedding &m) {
    auto why = minor_violation(g, m);
    if (!why.empty()) {
        throw std::logic_error("grid minor embedder produced an invalid embedding: " + why);
    }
}

}  // namespace

std::optional<MinorEmbedding> embed_grid_side(const Graph &g, size_t t, uint64_t seed) {
    require_connected_host(g);
    auto xy = coordinates(g);
    Router router(g);
    auto m = try_side(g, t, seed, xy, router);
    if (m) {
        check_result(g, *m);
    }
    return m;
}

MinorEmbedding embed_grid_minor(const Graph &g, uint64_t seed) {
    require_connected_host(g);
    auto xy = coordinates(g);
    Router router(g);
    MinorEmbedding best = single_vertex();
    size_t lo = 1;
    auto hi = static_cast<size_t>(std::sqrt(static_cast<double>(g.num_vertices())));
    while (hi * hi > g.num_vertices()) {
        hi--;
    }
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (auto m = try_side(g, mid, seed, xy, router)) {
            best = std::move(*m);
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    check_result(g, best);
    return best;
}

nlohmann::json minor_to_json(const MinorEmbedding &m) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto &s : m.branch_sets) {
        sets.push_back(s);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &e : m.edges) {
        edges.push_back({{"grid", {e.a, e.b}}, {"host", {e.host.u, e.host.v}}});
    }
    return {{"grid_rows", m.rows}, {"grid_cols", m.cols}, {"branch_sets", sets}, {"connecting_edges", edges}};
}

nlohmann::json giant_expansion_to_json(const GiantExpansionReport &r) {
    nlohmann::json j = {{"original_n", r.original_n},
                        {"giant_size", r.giant_size},
                        {"giant_ok", r.giant_ok},
                        {"check", r.exact ? "exact" : "spectral"},
                        {"interval", {r.lo, r.hi}},
                        {"target", r.target.to_string()},
                        {"passes", r.passes}};
    j["h_prime"] = r.h_prime ? nlohmann::json(r.h_prime->to_string()) : nlohmann::json(nullptr);
    j["h_lower"] = r.h_lower ? nlohmann::json(*r.h_lower) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json trim_to_json(const TrimResult &r) {
    return {{"removed", r.removed},
            {"remaining", r.trimmed.to_parent},
            {"h_prime", r.h_prime.to_string()},
            {"size_ok", r.size_ok},
            {"ok", r.ok}};
}

}  // namespace gsswb
