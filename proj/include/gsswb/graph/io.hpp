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

#include <optional>
#include <string>

#include "gsswb/graph/coloring.hpp"
#include "gsswb/graph/graph.hpp"
#include "json.hpp"

namespace gsswb {

/// {"n": int, "edges": [[u,v],...]} with edges in canonical order, plus
/// "pairing": {"pair": [...], "base_vertex": [...], "layer": [...]} when given.
/// A dropped pair is written as -1.
nlohmann::json graph_to_json(const Graph &g, const K2Pairing *pairing = nullptr);

struct GraphWithPairing {
    Graph graph;
    std::optional<K2Pairing> pairing;
};

/// Throws std::invalid_argument on malformed documents or invalid pairings.
GraphWithPairing graph_from_json(const nlohmann::json &j);

/// Graphviz rendering; edge labels carry colors when a coloring is given.
std::string graph_to_dot(const Graph &g, const EdgeColoring *coloring = nullptr);

}  // namespace gsswb
