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

#include "gsswb/graph/io.hpp"

#include <sstream>
#include <stdexcept>

namespace gsswb {

using nlohmann::json;

json graph_to_json(const Graph &g, const K2Pairing *pairing) {
    json edges = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    json j = {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
    if (pairing != nullptr) {
        json pair = json::array();
        for (Vertex v : pairing->pair) {
            if (v == kNoVertex) {
                pair.push_back(-1);
            } else {
                pair.push_back(v);
            }
        }
        j["pairing"] = {
            {"pair", std::move(pair)},
            {"base_vertex", pairing->base_vertex},
            {"layer", pairing->layer},
        };
    }
    return j;
}

static Vertex vertex_field(const json &v, const char *what) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() >= int64_t{kNoVertex}) {
        throw std::invalid_argument(std::string("graph JSON: bad vertex id in ") + what);
    }
    return v.get<Vertex>();
}

GraphWithPairing graph_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON must be an object with 'n' and 'edges'");
    }
    if (!j["n"].is_number_integer() || j["n"].get<int64_t>() < 0) {
        throw std::invalid_argument("graph JSON: 'n' must be a non-negative integer");
    }
    size_t n = j["n"].get<size_t>();
    if (!j["edges"].is_array()) {
        throw std::invalid_argument("graph JSON: 'edges' must be an array");
    }
    std::vector<Edge> edges;
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("graph JSON: each edge must be a pair [u, v]");
        }
        edges.push_back({vertex_field(e[0], "edges"), vertex_field(e[1], "edges")});
    }
    GraphWithPairing out{Graph(n, std::move(edges)), std::nullopt};
    if (j.contains("pairing") && !j["pairing"].is_null()) {
        const json &p = j["pairing"];
        K2Pairing pairing;
        for (const auto &v : p.at("pair")) {
            pairing.pair.push_back(v.get<int64_t>() < 0 ? kNoVertex : vertex_field(v, "pairing.pair"));
        }
        for (const auto &v : p.at("base_vertex")) {
            pairing.base_vertex.push_back(vertex_field(v, "pairing.base_vertex"));
        }
        for (const auto &v : p.at("layer")) {
            pairing.layer.push_back(static_cast<uint8_t>(v.get<int>()));
        }
        std::string problem = pairing_violation(out.graph, pairing);
        if (!problem.empty()) {
            throw std::invalid_argument("graph JSON: invalid pairing: " + problem);
        }
        out.pairing = std::move(pairing);
    }
    return out;
}

std::string graph_to_dot(const Graph &g, const EdgeColoring *coloring) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        out << "  " << v << ";\n";
    }
    for (EdgeId e = 0; e < g.num_edges(); e++) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (coloring != nullptr && e < coloring->color.size()) {
            out << " [label=\"" << coloring->color[e] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gsswb
