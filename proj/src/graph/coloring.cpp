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

#include "gsswb/graph/coloring.hpp"

#include <limits>
#include <stdexcept>

namespace gsswb {

namespace {

constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

class MisraGries {
   public:
    explicit MisraGries(const Graph &g)
        : g_(g),
          palette_(static_cast<uint32_t>(g.max_degree() + 1)),
          color_(g.num_edges(), kNone),
          at_(g.num_vertices() * palette_, kNone) {
    }

    void run() {
        for (EdgeId e = 0; e < g_.num_edges(); e++) {
            color_edge(e);
        }
    }

    EdgeColoring finish() const {
        std::vector<uint32_t> remap(palette_, kNone);
        uint32_t used = 0;
        std::vector<uint8_t> present(palette_, 0);
        for (uint32_t c : color_) {
            present[c] = 1;
        }
        for (uint32_t c = 0; c < palette_; c++) {
            if (present[c]) {
                remap[c] = used++;
            }
        }
        EdgeColoring out;
        out.num_colors = used;
        out.color.resize(color_.size());
        for (size_t e = 0; e < color_.size(); e++) {
            out.color[e] = remap[color_[e]];
        }
        return out;
    }

   private:
    bool is_free(Vertex x, uint32_t c) const {
        return at_[static_cast<size_t>(x) * palette_ + c] == kNone;
    }

    uint32_t first_free(Vertex x) const {
        for (uint32_t c = 0; c < palette_; c++) {
            if (is_free(x, c)) {
                return c;
            }
        }
        throw std::logic_error("no free color at a vertex; palette too small");
    }

    Vertex other(EdgeId e, Vertex x) const {
        const Edge &ed = g_.edge(e);
        return ed.u == x ? ed.v : ed.u;
    }

    void assign(EdgeId e, uint32_t c) {
        const Edge &ed = g_.edge(e);
        color_[e] = c;
        at_[static_cast<size_t>(ed.u) * palette_ + c] = e;
        at_[static_cast<size_t>(ed.v) * palette_ + c] = e;
    }

    void unassign(EdgeId e) {
        uint32_t c = color_[e];
        if (c == kNone) {
            return;
        }
        const Edge &ed = g_.edge(e);
        at_[static_cast<size_t>(ed.u) * palette_ + c] = kNone;
        at_[static_cast<size_t>(ed.v) * palette_ + c] = kNone;
        color_[e] = kNone;
    }

    void color_edge(EdgeId e) {
        Vertex u = g_.edge(e).u;
        Vertex v = g_.edge(e).v;

        // Maximal fan of u starting at v: consecutive edges (u, f_i) whose
        // color is free on f_{i-1}.
        fan_.assign(1, v);
        fan_edges_.assign(1, e);
        in_fan_.assign(1, v);
        while (true) {
            Vertex last = fan_.back();
            bool grown = false;
            for (uint32_t c = 0; c < palette_ && !grown; c++) {
                if (!is_free(last, c)) {
                    continue;
                }
                EdgeId candidate = at_[static_cast<size_t>(u) * palette_ + c];
                if (candidate == kNone) {
                    continue;
                }
                Vertex w = other(candidate, u);
                bool seen = false;
                for (Vertex f : in_fan_) {
                    if (f == w) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) {
                    fan_.push_back(w);
                    fan_edges_.push_back(candidate);
                    in_fan_.push_back(w);
                    grown = true;
                }
            }
            if (!grown) {
                break;
            }
        }

        uint32_t c = first_free(u);
        uint32_t d = first_free(fan_.back());

        if (c != d) {
            invert_path(u, c, d);
        }

        // Smallest prefix end w with d free on w that is still a fan.
        size_t j = kNone;
        for (size_t i = 0; i < fan_.size(); i++) {
            if (i > 0) {
                uint32_t ci = color_[fan_edges_[i]];
                if (ci == kNone || !is_free(fan_[i - 1], ci)) {
                    break;
                }
            }
            if (is_free(fan_[i], d)) {
                j = i;
                break;
            }
        }
        if (j == kNone) {
            throw std::logic_error("edge coloring: no valid fan prefix found");
        }

        // Rotate: (u, f_i) takes the color of (u, f_{i+1}) for i < j.
        for (size_t i = 0; i < j; i++) {
            uint32_t next_color = color_[fan_edges_[i + 1]];
            unassign(fan_edges_[i + 1]);
            assign(fan_edges_[i], next_color);
        }
        assign(fan_edges_[j], d);
    }

    // Swaps colors c and d along the maximal path from u that starts with a
    // d-colored edge (c is free on u).
    void invert_path(Vertex u, uint32_t c, uint32_t d) {
        path_.clear();
        Vertex x = u;
        uint32_t cur = d;
        while (true) {
            EdgeId e = at_[static_cast<size_t>(x) * palette_ + cur];
            if (e == kNone) {
                break;
            }
            path_.push_back(e);
            x = other(e, x);
            cur = cur == d ? c : d;
        }
        path_colors_.clear();
        for (EdgeId e : path_) {
            path_colors_.push_back(color_[e]);
            unassign(e);
        }
        for (size_t i = 0; i < path_.size(); i++) {
            assign(path_[i], path_colors_[i] == d ? c : d);
        }
    }

    const Graph &g_;
    uint32_t palette_;
    std::vector<uint32_t> color_;
    std::vector<EdgeId> at_;
    std::vector<Vertex> fan_;
    std::vector<EdgeId> fan_edges_;
    std::vector<Vertex> in_fan_;
    std::vector<EdgeId> path_;
    std::vector<uint32_t> path_colors_;
};

}  // namespace

EdgeColoring edge_color(const Graph &g) {
    if (g.num_edges() == 0) {
        return {};
    }
    MisraGries mg(g);
    mg.run();
    return mg.finish();
}

std::string edge_coloring_violation(const Graph &g, const EdgeColoring &c) {
    if (c.color.size() != g.num_edges()) {
        return "coloring has " + std::to_string(c.color.size()) + " entries for " + std::to_string(g.num_edges()) +
               " edges";
    }
    for (EdgeId e = 0; e < g.num_edges(); e++) {
        if (c.color[e] >= c.num_colors) {
            return "edge " + std::to_string(e) + " has color " + std::to_string(c.color[e]) + " >= num_colors";
        }
    }
    std::vector<uint8_t> seen(c.num_colors, 0);
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        for (EdgeId e : g.incident_edges(v)) {
            if (seen[c.color[e]]) {
                return "two edges at vertex " + std::to_string(v) + " share color " + std::to_string(c.color[e]);
            }
            seen[c.color[e]] = 1;
        }
        for (EdgeId e : g.incident_edges(v)) {
            seen[c.color[e]] = 0;
        }
    }
    return {};
}

std::vector<std::vector<EdgeId>> color_classes(const EdgeColoring &c) {
    std::vector<std::vector<EdgeId>> out(c.num_colors);
    for (EdgeId e = 0; e < c.color.size(); e++) {
        out[c.color[e]].push_back(e);
    }
    return out;
}

}  // namespace gsswb
