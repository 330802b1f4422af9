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

#include "gsswb/lightcone/falsify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "gsswb/common/errors.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/corruption/experiment.hpp"
#include "gsswb/expander/expander.hpp"
#include "gsswb/gss/gss.hpp"

namespace gsswb {

namespace {

std::optional<uint64_t> parse_index(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) {
        return std::nullopt;
    }
    auto rest = name.substr(prefix.size());
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        return std::nullopt;
    }
    return value;
}

void check_input_labels(const ClassicalCircuit &c, const Graph &g) {
    for (const auto &name : c.input_names()) {
        if (auto v = parse_index(name, "xv:")) {
            if (*v < g.num_vertices()) {
                continue;
            }
        } else if (auto e = parse_index(name, "xe:")) {
            if (*e < g.num_edges()) {
                continue;
            }
        } else if (parse_index(name, "r:")) {
            continue;
        }
        throw std::invalid_argument("circuit input '" + name + "' is not a vertex, edge or random bit of the graph");
    }
}

std::vector<Vertex> output_vertices(const ClassicalCircuit &c, size_t n) {
    std::vector<Vertex> out;
    for (const auto &o : c.outputs()) {
        auto v = parse_index(o.name, "z:");
        if (!v || *v >= n) {
            throw std::invalid_argument("circuit output '" + o.name + "' is not z:<v> for a vertex of the graph");
        }
        out.push_back(static_cast<Vertex>(*v));
    }
    return out;
}

std::vector<VertexSet> cones_from(const ClassicalCircuit &c, const ClassicalCircuit::Lightcones &lc, size_t n) {
    auto out_vertex = output_vertices(c, n);
    std::vector<VertexSet> cones(n);
    for (Vertex v = 0; v < n; v++) {
        auto i = c.input_index("xv:" + std::to_string(v));
        if (!i) {
            continue;
        }
        for (uint32_t j : lc.forward[*i]) {
            cones[v].push_back(out_vertex[j]);
        }
        std::sort(cones[v].begin(), cones[v].end());
        cones[v].erase(std::unique(cones[v].begin(), cones[v].end()), cones[v].end());
    }
    return cones;
}

GoodBadReport classify_with(const ClassicalCircuit &c, const Graph &g, double coeff,
                            const ClassicalCircuit::Lightcones &lc) {
    if (!(coeff > 0)) {
        throw std::invalid_argument("threshold coefficient must be positive");
    }
    check_input_labels(c, g);
    output_vertices(c, g.num_vertices());
    GoodBadReport rep;
    size_t n = g.num_vertices();
    rep.threshold_coeff = coeff;
    rep.threshold = coeff * std::pow(double(n), 1.0 / 16);
    rep.depth = c.depth();
    rep.fan_in = c.fan_in();
    rep.outputs = c.outputs().size();
    rep.counting_bound = double(rep.outputs) * std::pow(double(rep.fan_in), double(rep.depth)) / rep.threshold;
    for (Vertex v = 0; v < n; v++) {
        auto i = c.input_index("xv:" + std::to_string(v));
        size_t size = i ? lc.forward[*i].size() : 0;
        rep.max_forward = std::max(rep.max_forward, size);
        (double(size) <= rep.threshold ? rep.good : rep.bad).push_back(v);
    }
    return rep;
}

// S id -> G' id, kNoVertex outside the core.
std::vector<Vertex> base_index(const ProductCore &core) {
    Vertex top = 0;
    for (const auto &cp : core.copies) {
        top = std::max({top, cp[0] + 1, cp[1] + 1});
    }
    std::vector<Vertex> out(top, kNoVertex);
    for (Vertex b = 0; b < core.copies.size(); b++) {
        out[core.copies[b][0]] = b;
        out[core.copies[b][1]] = b;
    }
    return out;
}

// Base vertices whose copies meet the two-copy lightcone of mark base vertex b.
VertexSet mark_cone_base(const SelectionContext &ctx, const std::vector<Vertex> &base_of, Vertex b) {
    VertexSet out;
    for (Vertex copy : ctx.core.copies[b]) {
        for (Vertex w : ctx.cones[copy]) {
            if (w < base_of.size() && base_of[w] != kNoVertex) {
                out.push_back(base_of[w]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint32_t> cell_index(const MinorEmbedding &m, size_t n) {
    std::vector<uint32_t> cell(n, UINT32_MAX);
    for (uint32_t k = 0; k < m.branch_sets.size(); k++) {
        for (Vertex v : m.branch_sets[k]) {
            cell[v] = k;
        }
    }
    return cell;
}

BoxRegion make_box(const SelectionContext &ctx, size_t row, size_t col, Vertex center) {
    BoxRegion box;
    box.center = center;
    box.center_row = row;
    box.center_col = col;
    size_t half = (ctx.box_side - 1) / 2;
    box.cells = GridRegion{row - half, col - half, ctx.box_side};
    for (uint32_t k : box.cells.cells(ctx.minor.cols)) {
        for (Vertex b : ctx.minor.branch_sets[k]) {
            box.base_vertices.push_back(b);
            box.host_vertices.push_back(ctx.core.copies[b][0]);
            box.host_vertices.push_back(ctx.core.copies[b][1]);
        }
    }
    std::sort(box.base_vertices.begin(), box.base_vertices.end());
    std::sort(box.host_vertices.begin(), box.host_vertices.end());
    return box;
}

// Cells of the region whose box of the given side stays inside it.
std::vector<uint32_t> centre_cells(const GridRegion &region, size_t side, size_t cols) {
    std::vector<uint32_t> out;
    size_t half = (side - 1) / 2;
    for (size_t r = region.row0; r < region.row0 + region.side; r++) {
        for (size_t c = region.col0; c < region.col0 + region.side; c++) {
            if (r >= half && c >= half && region.contains(r - half, c - half) &&
                region.contains(r - half + side - 1, c - half + side - 1)) {
                out.push_back(static_cast<uint32_t>(r * cols + c));
            }
        }
    }
    return out;
}

// Two internally disjoint paths centre -> e1 and centre -> e2 inside the
// allowed vertices (unit vertex capacities), returned as the walk
// e1 ... centre ... e2.
class TwoPaths {
   public:
    std::optional<VertexSet> find(const Graph &g, const VertexSet &allowed, Vertex center, Vertex e1, Vertex e2,
                                  Vertex blocked) {
        size_t n = allowed.size();
        auto local = [&](Vertex v) -> int {
            auto it = std::lower_bound(allowed.begin(), allowed.end(), v);
            return it != allowed.end() && *it == v && v != blocked ? int(it - allowed.begin()) : -1;
        };
        int sc = local(center), s1 = local(e1), s2 = local(e2);
        if (sc < 0 || s1 < 0 || s2 < 0) {
            return std::nullopt;
        }
        arcs_.assign(2 * n + 1, {});
        int sink = int(2 * n);
        for (size_t i = 0; i < n; i++) {
            if (allowed[i] == blocked) {
                continue;
            }
            add(int(2 * i), int(2 * i + 1), int(i) == sc ? 2 : 1);
            for (Vertex w : g.neighbors(allowed[i])) {
                int j = local(w);
                if (j >= 0) {
                    add(int(2 * i + 1), 2 * j, 1);
                }
            }
        }
        add(2 * s1 + 1, sink, 1);
        add(2 * s2 + 1, sink, 1);
        for (int unit = 0; unit < 2; unit++) {
            if (!augment(2 * sc, sink)) {
                return std::nullopt;
            }
        }
        std::array<VertexSet, 2> legs;
        for (auto &leg : legs) {
            int cur = sc;
            leg.push_back(allowed[size_t(cur)]);
            while (true) {
                int next = -2;
                for (auto &a : arcs_[size_t(2 * cur + 1)]) {
                    if (a.orig > 0 && a.cap == 0 && !a.used) {
                        a.used = true;
                        next = a.to == sink ? -1 : a.to / 2;
                        break;
                    }
                }
                if (next == -2) {
                    throw std::logic_error("flow decomposition lost a path");
                }
                if (next == -1) {
                    break;
                }
                cur = next;
                leg.push_back(allowed[size_t(cur)]);
            }
        }
        if (legs[0].back() != e1) {
            std::swap(legs[0], legs[1]);
        }
        VertexSet walk(legs[0].rbegin(), legs[0].rend());
        walk.insert(walk.end(), legs[1].begin() + 1, legs[1].end());
        return walk;
    }

   private:
    struct Arc {
        int to;
        int cap;
        int orig;
        size_t rev;
        bool used;
    };
    std::vector<std::vector<Arc>> arcs_;

    void add(int u, int v, int cap) {
        arcs_[size_t(u)].push_back({v, cap, cap, arcs_[size_t(v)].size(), false});
        arcs_[size_t(v)].push_back({u, 0, 0, arcs_[size_t(u)].size() - 1, false});
    }
    bool augment(int s, int t) {
        std::vector<std::pair<int, size_t>> from(arcs_.size(), {-1, 0});
        std::deque<int> queue{s};
        from[size_t(s)] = {s, 0};
        while (!queue.empty() && from[size_t(t)].first < 0) {
            int x = queue.front();
            queue.pop_front();
            for (size_t k = 0; k < arcs_[size_t(x)].size(); k++) {
                const auto &a = arcs_[size_t(x)][k];
                if (a.cap > 0 && from[size_t(a.to)].first < 0) {
                    from[size_t(a.to)] = {x, k};
                    queue.push_back(a.to);
                }
            }
        }
        if (from[size_t(t)].first < 0) {
            return false;
        }
        for (int y = t; y != s;) {
            auto [x, k] = from[size_t(y)];
            auto &a = arcs_[size_t(x)][k];
            a.cap--;
            arcs_[size_t(y)][a.rev].cap++;
            y = x;
        }
        return true;
    }
};

}  // namespace

GoodBadReport classify_good_bad(const ClassicalCircuit &c, const Graph &g, double threshold_coeff) {
    return classify_with(c, g, threshold_coeff, c.lightcones());
}

std::vector<VertexSet> vertex_lightcones(const ClassicalCircuit &c, size_t num_vertices) {
    return cones_from(c, c.lightcones(), num_vertices);
}

ProductCore good_product_core(const Graph &s, const K2Pairing &pairing, const std::vector<uint8_t> &usable) {
    size_t n = s.num_vertices();
    if (pairing.size() != n || usable.size() != n) {
        throw std::invalid_argument("pairing and usable flags must cover every vertex");
    }
    std::vector<Vertex> h_of(n, kNoVertex);
    std::vector<std::array<Vertex, 2>> h_copies;
    for (Vertex v = 0; v < n; v++) {
        Vertex w = pairing.pair[v];
        if (pairing.layer[v] != 0 || w == kNoVertex || !usable[v] || !usable[w]) {
            continue;
        }
        h_of[v] = h_of[w] = static_cast<Vertex>(h_copies.size());
        h_copies.push_back({v, w});
    }
    std::vector<Edge> edges;
    for (Vertex h = 0; h < h_copies.size(); h++) {
        for (Vertex w : s.neighbors(h_copies[h][0])) {
            if (h_of[w] != kNoVertex && h_of[w] > h) {
                edges.push_back({h, h_of[w]});
            }
        }
    }
    Graph hg(h_copies.size(), std::move(edges));
    ProductCore core;
    core.paired = h_copies.size();
    if (h_copies.empty()) {
        return core;
    }
    auto comps = connected_components(hg);
    const VertexSet *best = &comps[0];
    for (const auto &comp : comps) {
        if (comp.size() > best->size()) {
            best = &comp;
        }
    }
    auto sub = induced_subgraph(hg, *best);
    core.base = std::move(sub.graph);
    for (Vertex h : sub.to_parent) {
        core.copies.push_back(h_copies[h]);
    }
    return core;
}

std::vector<uint32_t> GridRegion::cells(size_t grid_cols) const {
    std::vector<uint32_t> out;
    for (size_t r = row0; r < row0 + side; r++) {
        for (size_t c = col0; c < col0 + side; c++) {
            out.push_back(static_cast<uint32_t>(r * grid_cols + c));
        }
    }
    return out;
}

Regions select_regions(size_t grid_side) {
    if (grid_side < 3) {
        throw std::invalid_argument("regions need a grid side of at least 3, got " + std::to_string(grid_side));
    }
    size_t k = grid_side / 3;
    Regions r;
    r.grid_side = grid_side;
    r.P = {0, 0, k};
    r.Q = {0, grid_side - k, k};
    r.R = {grid_side - k, 0, k};
    return r;
}

Regions select_regions(const MinorEmbedding &m) {
    if (m.rows != m.cols) {
        throw std::invalid_argument("regions need a square grid minor");
    }
    return select_regions(m.rows);
}

VertexSet region_host_vertices(const MinorEmbedding &m, const ProductCore &core, const GridRegion &region) {
    VertexSet out;
    for (uint32_t k : region.cells(m.cols)) {
        for (Vertex b : m.branch_sets.at(k)) {
            out.push_back(core.copies.at(b)[0]);
            out.push_back(core.copies.at(b)[1]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> cross_paths(const Graph &base, const MinorEmbedding &m) {
    if (m.rows < 2 || m.cols < 2) {
        throw std::invalid_argument("cross paths need a grid of side at least 2");
    }
    auto cell = cell_index(m, base.num_vertices());
    std::map<std::pair<uint32_t, uint32_t>, Edge> witness;
    for (const auto &w : m.edges) {
        witness[{w.a, w.b}] = w.host;
    }
    // Endpoint inside cell x of the witness edge towards cell y.
    auto endpoint = [&](uint32_t x, uint32_t y) {
        if (auto it = witness.find({x, y}); it != witness.end()) {
            return it->second.u;
        }
        return witness.at({y, x}).v;
    };
    std::vector<VertexSet> out(m.rows * m.cols);
    std::vector<Vertex> parent(base.num_vertices(), kNoVertex);
    for (size_t r = 0; r < m.rows; r++) {
        for (size_t c = 0; c < m.cols; c++) {
            auto x = static_cast<uint32_t>(r * m.cols + c);
            uint32_t h = static_cast<uint32_t>(r * m.cols + (c + 1 < m.cols ? c + 1 : c - 1));
            uint32_t v = static_cast<uint32_t>((r + 1 < m.rows ? r + 1 : r - 1) * m.cols + c);
            Vertex from = endpoint(x, h), to = endpoint(x, v);
            for (Vertex b : m.branch_sets[x]) {
                parent[b] = kNoVertex;
            }
            parent[from] = from;
            std::deque<Vertex> queue{from};
            while (!queue.empty() && parent[to] == kNoVertex) {
                Vertex a = queue.front();
                queue.pop_front();
                for (Vertex b : base.neighbors(a)) {
                    if (cell[b] == x && parent[b] == kNoVertex) {
                        parent[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if (parent[to] == kNoVertex) {
                throw std::invalid_argument("branch set " + std::to_string(x) + " is not connected");
            }
            VertexSet path{to};
            while (path.back() != from) {
                path.push_back(parent[path.back()]);
            }
            std::reverse(path.begin(), path.end());
            out[x] = std::move(path);
        }
    }
    return out;
}

PqrSelection select_pqr(const SelectionContext &ctx, const Regions &regions, uint64_t seed, size_t max_tries) {
    const auto &m = ctx.minor;
    if (m.rows != regions.grid_side || m.cols != regions.grid_side) {
        throw std::invalid_argument("regions do not match the grid minor");
    }
    auto cross = cross_paths(ctx.core.base, m);
    auto base_of = base_index(ctx.core);
    auto cell = cell_index(m, ctx.core.base.num_vertices());
    std::array<std::vector<uint32_t>, 3> cands;
    std::array<const GridRegion *, 3> regs{&regions.P, &regions.Q, &regions.R};
    for (int k = 0; k < 3; k++) {
        cands[k] = centre_cells(*regs[k], ctx.box_side, m.cols);
        if (cands[k].empty()) {
            throw StageFailure("select_pqr", "box side " + std::to_string(ctx.box_side) + " does not fit region side " +
                                                 std::to_string(regs[k]->side));
        }
    }
    Rng rng(seed);
    for (size_t attempt = 1; attempt <= max_tries; attempt++) {
        PqrSelection sel;
        sel.tries = attempt;
        for (int k = 0; k < 3; k++) {
            uint32_t x = cands[k][rng.below(cands[k].size())];
            const auto &path = cross[x];
            Vertex centre = path[rng.below(path.size())];
            sel.boxes[k] = make_box(ctx, x / m.cols, x % m.cols, centre);
        }
        bool ok = true;
        for (int k = 0; k < 3 && ok; k++) {
            for (Vertex b : mark_cone_base(ctx, base_of, sel.boxes[k].center)) {
                for (int j = 0; j < 3; j++) {
                    if (j != k && sel.boxes[j].cells.contains(cell[b] / m.cols, cell[b] % m.cols) &&
                        cell[b] != UINT32_MAX) {
                        ok = false;
                    }
                }
            }
        }
        if (ok) {
            return sel;
        }
    }
    throw StageFailure("select_pqr", "no admissible triple in " + std::to_string(max_tries) +
                                         " tries (rejection rate 1)");
}

CycleResult build_cycle_through_boxes(const SelectionContext &ctx, const PqrSelection &sel, uint64_t seed,
                                      size_t max_tries, size_t channels_per_pair) {
    const Graph &g = ctx.core.base;
    size_t n = g.num_vertices();
    auto base_of = base_index(ctx.core);
    std::vector<uint8_t> in_box(n, 0);
    for (int k = 0; k < 3; k++) {
        for (Vertex b : sel.boxes[k].base_vertices) {
            if (in_box[b] != 0) {
                throw std::invalid_argument("boxes overlap");
            }
            in_box[b] = static_cast<uint8_t>(k + 1);
        }
    }
    // Vertices whose copies lie in some mark's lightcone.
    std::vector<uint8_t> hit(n, 0);
    for (int k = 0; k < 3; k++) {
        for (Vertex b : mark_cone_base(ctx, base_of, sel.boxes[k].center)) {
            hit[b] = 1;
        }
    }

    // Vertex-disjoint channels, round robin over the pairs.
    constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {1, 2}, {0, 2}}};
    std::array<std::vector<VertexSet>, 3> channels;
    std::vector<uint8_t> used(n, 0);
    for (const auto &box : sel.boxes) {
        used[box.center] = 1;
    }
    std::vector<Vertex> parent(n);
    auto route = [&](int a, int b) -> std::optional<VertexSet> {
        std::fill(parent.begin(), parent.end(), kNoVertex);
        std::deque<Vertex> queue;
        for (Vertex v : sel.boxes[a].base_vertices) {
            if (!used[v]) {
                parent[v] = v;
                queue.push_back(v);
            }
        }
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (used[y] || parent[y] != kNoVertex) {
                    continue;
                }
                if (in_box[y] == b + 1) {
                    VertexSet path{y, x};
                    while (parent[path.back()] != path.back()) {
                        path.push_back(parent[path.back()]);
                    }
                    std::reverse(path.begin(), path.end());
                    for (Vertex v : path) {
                        used[v] = 1;
                    }
                    return path;
                }
                if (in_box[y] == 0) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        return std::nullopt;
    };
    size_t rounds = channels_per_pair == 0 ? ctx.box_side : channels_per_pair;
    for (size_t round = 0; round < rounds; round++) {
        for (size_t k = 0; k < 3; k++) {
            if (auto path = route(kPairs[k].first, kPairs[k].second)) {
                channels[k].push_back(std::move(*path));
            }
        }
    }
    CycleResult res;
    for (size_t k = 0; k < 3; k++) {
        res.channels[k] = channels[k].size();
        if (channels[k].empty()) {
            throw StageFailure("channels", "no channel between boxes " + std::to_string(kPairs[k].first) + " and " +
                                               std::to_string(kPairs[k].second));
        }
    }

    Rng rng(seed);
    TwoPaths flow;
    for (size_t attempt = 1; attempt <= max_tries; attempt++) {
        res.tries = attempt;
        std::array<const VertexSet *, 3> pick;
        bool clear = true;
        for (size_t k = 0; k < 3; k++) {
            pick[k] = &channels[k][rng.below(channels[k].size())];
            for (size_t i = 1; i + 1 < pick[k]->size(); i++) {
                clear = clear && !hit[(*pick[k])[i]];
            }
        }
        if (!clear) {
            continue;
        }
        const auto &pq = *pick[0], &qr = *pick[1], &pr = *pick[2];
        // Box k is entered at ends[k][0] and left at ends[k][1].
        std::array<std::array<Vertex, 2>, 3> ends{{{pr.front(), pq.front()}, {pq.back(), qr.front()}, {qr.back(), pr.back()}}};
        std::array<VertexSet, 3> segs;
        bool found = true;
        for (int k = 0; k < 3 && found; k++) {
            auto walk = flow.find(g, sel.boxes[k].base_vertices, sel.boxes[k].center, ends[k][0], ends[k][1], kNoVertex);
            found = walk.has_value();
            if (found) {
                segs[k] = std::move(*walk);
            }
        }
        if (!found) {
            continue;
        }
        size_t length = segs[0].size() + segs[1].size() + segs[2].size() + pq.size() + qr.size() + pr.size() - 6;
        for (int k = 0; k < 3 && length % 2 == 1; k++) {
            // Detour: block one interior vertex of the completion and hope
            // the replacement has the other parity.
            for (size_t i = 1; i + 1 < segs[k].size(); i++) {
                if (segs[k][i] == sel.boxes[k].center) {
                    continue;
                }
                auto walk = flow.find(g, sel.boxes[k].base_vertices, sel.boxes[k].center, ends[k][0], ends[k][1],
                                      segs[k][i]);
                if (walk && walk->size() % 2 != segs[k].size() % 2) {
                    length = length - segs[k].size() + walk->size();
                    segs[k] = std::move(*walk);
                    break;
                }
            }
        }
        if (length % 2 == 1) {
            continue;
        }
        VertexSet cycle;
        std::array<size_t, 3> mark_pos{};
        auto append_seg = [&](int k) {
            for (Vertex v : segs[k]) {
                if (v == sel.boxes[k].center) {
                    mark_pos[k] = cycle.size();
                }
                cycle.push_back(v);
            }
        };
        append_seg(0);
        cycle.insert(cycle.end(), pq.begin() + 1, pq.end() - 1);
        append_seg(1);
        cycle.insert(cycle.end(), qr.begin() + 1, qr.end() - 1);
        append_seg(2);
        cycle.insert(cycle.end(), pr.rbegin() + 1, pr.rend() - 1);
        if (cycle.size() != length) {
            throw std::logic_error("cycle assembly lost vertices");
        }
        // Ladder lift: base vertex i is entered in layer i mod 2 and left in
        // the other layer, so the product cycle closes with even length.
        VertexSet lifted;
        for (size_t i = 0; i < cycle.size(); i++) {
            const auto &cp = ctx.core.copies[cycle[i]];
            lifted.push_back(cp[i % 2]);
            lifted.push_back(cp[1 - i % 2]);
        }
        res.base_cycle = std::move(cycle);
        res.spec = TriangleSpec::build(std::move(lifted), {2 * mark_pos[0], 2 * mark_pos[1], 2 * mark_pos[2]});
        return res;
    }
    throw StageFailure("cycle", "no admissible channel triple in " + std::to_string(max_tries) + " tries");
}

std::string selection_violation(const SelectionContext &ctx, const PqrSelection &sel, const CycleResult &cycle) {
    const auto &spec = cycle.spec;
    if (spec.length() % 2 != 0) {
        return "cycle length is odd";
    }
    auto base_of = base_index(ctx.core);
    std::array<Vertex, 3> marks{spec.u(), spec.v(), spec.w()};
    for (int k = 0; k < 3; k++) {
        if (marks[k] >= base_of.size() || base_of[marks[k]] != sel.boxes[k].center) {
            return "mark " + std::to_string(k) + " is not the centre of its box";
        }
        for (int j = k + 1; j < 3; j++) {
            const auto &a = sel.boxes[k].host_vertices;
            const auto &b = sel.boxes[j].host_vertices;
            VertexSet common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty()) {
                return "boxes " + std::to_string(k) + " and " + std::to_string(j) + " overlap";
            }
        }
    }
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = i + 1; j < 3; j++) {
            size_t d = spec.marks[i] > spec.marks[j] ? spec.marks[i] - spec.marks[j] : spec.marks[j] - spec.marks[i];
            if (d % 2 != 0) {
                return "odd distance between marks";
            }
        }
    }
    for (int k = 0; k < 3; k++) {
        VertexSet cone;
        for (Vertex copy : ctx.core.copies[sel.boxes[k].center]) {
            cone.insert(cone.end(), ctx.cones[copy].begin(), ctx.cones[copy].end());
        }
        std::sort(cone.begin(), cone.end());
        for (int j = 0; j < 3; j++) {
            if (j == k) {
                continue;
            }
            const auto &box = sel.boxes[j].host_vertices;
            for (Vertex w : cone) {
                if (std::binary_search(box.begin(), box.end(), w)) {
                    return "lightcone of mark " + std::to_string(k) + " meets box " + std::to_string(j);
                }
            }
        }
        const auto &own = sel.boxes[k].host_vertices;
        for (Vertex w : spec.cycle) {
            if (!std::binary_search(own.begin(), own.end(), w) && std::binary_search(cone.begin(), cone.end(), w)) {
                return "lightcone of mark " + std::to_string(k) + " meets the cycle at " + std::to_string(w);
            }
        }
    }
    return {};
}

std::string status_name(FalsifyReport::Status s) {
    switch (s) {
        case FalsifyReport::Status::Violation:
            return "violation";
        case FalsifyReport::Status::NoViolation:
            return "no violation found";
        case FalsifyReport::Status::TooSmall:
            return "instance too small";
        case FalsifyReport::Status::StageFailed:
            return "stage failure";
    }
    return "?";
}

namespace {

nlohmann::json box_json(const BoxRegion &b) {
    return {{"center", b.center},
            {"center_cell", {b.center_row, b.center_col}},
            {"cells", {{"row0", b.cells.row0}, {"col0", b.cells.col0}, {"side", b.cells.side}}},
            {"host_vertices", b.host_vertices.size()}};
}

nlohmann::json region_json(const GridRegion &r) {
    return {{"row0", r.row0}, {"col0", r.col0}, {"side", r.side}};
}

FalsifyReport run_falsify(const ClassicalCircuit *c, const Graph &s, const K2Pairing &pairing, uint64_t seed,
                          const FalsifyOptions &opt) {
    size_t n = s.num_vertices();
    if (pairing.size() != n) {
        throw std::invalid_argument("pairing covers " + std::to_string(pairing.size()) + " vertices, graph has " +
                                    std::to_string(n));
    }
    if (auto bad = pairing_violation(s, pairing); !bad.empty()) {
        throw std::invalid_argument("invalid pairing: " + bad);
    }
    FalsifyReport rep;
    auto &diag = rep.diagnostics;
    diag["host"] = {{"vertices", n}, {"edges", s.num_edges()}};

    std::vector<uint8_t> usable(n, 1);
    std::vector<VertexSet> cones(n);
    ClassicalCircuit::Lightcones lc;
    if (c != nullptr) {
        lc = c->lightcones();
        auto gb = classify_with(*c, s, opt.threshold_coeff, lc);
        std::fill(usable.begin(), usable.end(), 0);
        for (Vertex v : gb.good) {
            usable[v] = 1;
        }
        cones = cones_from(*c, lc, n);
        diag["classify"] = good_bad_to_json(gb);
        if (n >= 2 && c->fan_in() >= 2) {
            double thr = classical_depth_threshold(double(n), double(c->fan_in()));
            diag["classify"]["depth_threshold"] = thr;
            if (double(gb.depth) >= thr) {
                rep.warnings.push_back("circuit depth " + std::to_string(gb.depth) +
                                       " is not below the depth threshold " + std::to_string(thr));
            }
        }
    } else {
        diag["classify"] = {{"candidate", "quantum-oracle"}, {"good", n}, {"bad", 0}};
    }

    auto core = good_product_core(s, pairing, usable);
    diag["core"] = {{"paired", core.paired}, {"vertices", core.base.num_vertices()},
                    {"edges", core.base.num_edges()}};
    auto too_small = [&](const std::string &stage, const std::string &detail) {
        rep.status = FalsifyReport::Status::TooSmall;
        rep.stage = stage;
        rep.detail = detail;
        return rep;
    };
    if (core.base.num_vertices() < 9 || core.base.num_edges() == 0) {
        return too_small("core", "good product core has " + std::to_string(core.base.num_vertices()) + " base vertices");
    }
    double h = spectral_h_lower(core.base, kTrialSpectral);
    diag["core"]["h_lower"] = h;
    diag["core"]["epsilon_threshold"] = h / 6;
    if (opt.epsilon >= h / 6) {
        rep.warnings.push_back("epsilon " + std::to_string(opt.epsilon) + " is not below h_lower/6 = " +
                               std::to_string(h / 6));
    }

    try {
        auto minor = embed_grid_minor(core.base, derive_seed(seed, "minor"));
        size_t t = minor.rows;
        size_t side = std::max<size_t>(
            1, std::min(size_t(std::floor(std::pow(double(core.base.num_vertices()), 1.0 / 8) + 1e-9)),
                        size_t(std::floor(std::sqrt(double(t)) + 1e-9))));
        diag["minor"] = {{"side", t}, {"box_side", side}};
        if (t < 3 * side) {
            return too_small("minor", "grid side " + std::to_string(t) + " is below 3 x box side " +
                                          std::to_string(side));
        }
        auto regions = select_regions(t);
        diag["regions"] = {{"P", region_json(regions.P)}, {"Q", region_json(regions.Q)}, {"R", region_json(regions.R)}};

        SelectionContext ctx{core, minor, cones, side};
        std::optional<PqrSelection> chosen;
        std::optional<CycleResult> built;
        for (size_t round = 0; !built; round++) {
            chosen = select_pqr(ctx, regions, derive_seed(seed, "select", round), opt.select_tries);
            try {
                built = build_cycle_through_boxes(ctx, *chosen, derive_seed(seed, "cycle", round), opt.channel_tries,
                                                  opt.channels_per_pair);
            } catch (const StageFailure &e) {
                if (round + 1 >= std::max<size_t>(1, opt.selection_rounds)) {
                    throw;
                }
            }
            diag["select_pqr"] = {
                {"round", round},
                {"tries", chosen->tries},
                {"boxes", {box_json(chosen->boxes[0]), box_json(chosen->boxes[1]), box_json(chosen->boxes[2])}}};
        }
        const auto &sel = *chosen;
        const auto &cyc = *built;
        diag["cycle"] = {{"length", cyc.spec.length()},
                         {"base_length", cyc.base_cycle.size()},
                         {"channels", cyc.channels},
                         {"tries", cyc.tries},
                         {"marks", {cyc.spec.u(), cyc.spec.v(), cyc.spec.w()}}};
        if (auto bad = selection_violation(ctx, sel, cyc); !bad.empty()) {
            throw std::logic_error("selection invariant broken: " + bad);
        }
        const auto &spec = cyc.spec;

        std::unique_ptr<Strategy> strategy;
        std::optional<ClassicalCircuit> restricted;
        if (c != nullptr) {
            auto zero = build_triangle_instance(s, spec, X3{});
            std::map<size_t, bool> fixed;
            for (size_t i = 0; i < c->num_inputs(); i++) {
                const auto &name = c->input_names()[i];
                if (auto v = parse_index(name, "xv:")) {
                    if (*v != spec.u() && *v != spec.v() && *v != spec.w()) {
                        fixed[i] = zero.x_vertex[*v];
                    }
                } else if (auto e = parse_index(name, "xe:")) {
                    fixed[i] = zero.x_edge[*e];
                }
            }
            restricted = c->restrict(fixed);
            auto lcd = restricted->lightcones();
            for (size_t i = 0; i < c->num_inputs(); i++) {
                const auto &a = lcd.forward[i];
                const auto &b = lc.forward[i];
                if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                    rep.monotonicity_violations++;
                }
            }
            rep.restriction_checked = true;
            if (rep.monotonicity_violations != 0) {
                throw std::logic_error("restriction enlarged " + std::to_string(rep.monotonicity_violations) +
                                       " lightcones");
            }
            auto loc = check_locality(*restricted, spec);
            diag["restriction"] = {{"fixed_inputs", fixed.size()},
                                   {"free_inputs", c->num_inputs() - fixed.size()},
                                   {"restricted_depth", restricted->depth()},
                                   {"monotonicity_violations", 0},
                                   {"locality_ok", loc.ok},
                                   {"locality_violations", loc.violations.size()}};
            strategy = std::make_unique<CircuitStrategy>(*restricted, spec, n);
        } else {
            strategy = std::make_unique<QuantumOracleStrategy>(s, spec);
        }

        LocalStrategyOptions lo;
        lo.trials = opt.local_trials;
        lo.seed = derive_seed(seed, "local");
        lo.stop_at_first = false;
        rep.local = test_local_strategy(*strategy, s, spec, lo);
        diag["local"] = {{"strategy", strategy->name()},
                         {"trials", rep.local.trials},
                         {"responses", rep.local.responses},
                         {"violations", rep.local.violations},
                         {"violations_by_x3", rep.local.violations_by_x3}};
        if (!rep.local.first) {
            rep.status = FalsifyReport::Status::NoViolation;
            return rep;
        }
        rep.status = FalsifyReport::Status::Violation;
        rep.witness = rep.local.first;
        if (c != nullptr) {
            // Rebuild the input from scratch and run the unrestricted circuit.
            auto inst = build_triangle_instance(s, spec, rep.witness->x3);
            BitVec in(c->num_inputs());
            Rng coins(rep.witness->r_seed);
            for (size_t i = 0; i < c->num_inputs(); i++) {
                const auto &name = c->input_names()[i];
                if (auto v = parse_index(name, "xv:")) {
                    in.set(i, inst.x_vertex[*v]);
                } else if (auto e = parse_index(name, "xe:")) {
                    in.set(i, inst.x_edge[*e]);
                } else {
                    in.set(i, coins.coin());
                }
            }
            auto out = c->eval(in);
            auto out_vertex = output_vertices(*c, n);
            BitVec z(n);
            for (size_t j = 0; j < out_vertex.size(); j++) {
                z.set(out_vertex[j], out[j]);
            }
            rep.witness_input = in;
            rep.re_verified = z == rep.witness->z && !verify(inst, z);
        } else {
            rep.re_verified = !verify(build_triangle_instance(s, spec, rep.witness->x3), rep.witness->z);
        }
        diag["witness_instance_x"] = build_triangle_instance(s, spec, rep.witness->x3).x().to_string();
    } catch (const StageFailure &e) {
        rep.status = FalsifyReport::Status::StageFailed;
        rep.stage = e.stage;
        rep.detail = e.what();
    }
    return rep;
}

}  // namespace

FalsifyReport falsify(const ClassicalCircuit &c, const Graph &s, const K2Pairing &pairing, uint64_t seed,
                      const FalsifyOptions &options) {
    return run_falsify(&c, s, pairing, seed, options);
}

FalsifyReport falsify_oracle(const Graph &s, const K2Pairing &pairing, uint64_t seed, const FalsifyOptions &options) {
    return run_falsify(nullptr, s, pairing, seed, options);
}

FalsifyHost make_falsify_host(size_t n, size_t degree, double epsilon, uint64_t seed) {
    auto base = random_regular_graph(n, degree, derive_seed(seed, "graph"));
    auto [prod, pairing] = product_k2(base);
    FalsifyHost host;
    host.base_n = n;
    host.removed = choose_removed(prod, epsilon, CorruptionStrategy::Random, derive_seed(seed, "corruption"));
    auto sub = remove_vertices(prod, host.removed);
    host.pairing = restrict_pairing(pairing, sub);
    host.graph = std::move(sub.graph);
    return host;
}

nlohmann::json good_bad_to_json(const GoodBadReport &r, bool with_sets) {
    nlohmann::json j = {{"threshold_coeff", r.threshold_coeff},
                        {"threshold", r.threshold},
                        {"good", r.good.size()},
                        {"bad", r.bad.size()},
                        {"max_forward_lightcone", r.max_forward},
                        {"depth", r.depth},
                        {"fan_in", r.fan_in},
                        {"outputs", r.outputs},
                        {"counting_bound", r.counting_bound}};
    if (with_sets) {
        j["bad_vertices"] = r.bad;
    }
    return j;
}

nlohmann::json falsify_to_json(const FalsifyReport &r) {
    nlohmann::json j = {{"status", status_name(r.status)},
                        {"stage", r.stage.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.stage)},
                        {"detail", r.detail},
                        {"warnings", r.warnings},
                        {"restriction_checked", r.restriction_checked},
                        {"monotonicity_violations", r.monotonicity_violations},
                        {"diagnostics", r.diagnostics}};
    if (r.witness) {
        auto w = violation_to_json(*r.witness);
        w["re_verified"] = r.re_verified;
        if (r.witness_input.size() != 0) {
            w["circuit_input"] = r.witness_input.to_string();
        }
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace gsswb
