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

#include <cstdint>
#include <string>
#include <vector>

#include "gsswb/graph/graph.hpp"

namespace gsswb {

struct EdgeColoring {
    std::vector<uint32_t> color;  // indexed by edge id
    uint32_t num_colors = 0;
};

/// Proper edge coloring with at most max_degree + 1 colors (Misra-Gries).
///
/// Colors are renumbered to 0..num_colors-1 in increasing order of the
/// palette slot they occupied, so num_colors counts colors actually used.
EdgeColoring edge_color(const Graph &g);

/// Empty string if `c` is a proper coloring of `g` using ids < num_colors,
/// otherwise a description of the first violation found.
std::string edge_coloring_violation(const Graph &g, const EdgeColoring &c);

/// Edge ids grouped by color, each group in ascending id order.
std::vector<std::vector<EdgeId>> color_classes(const EdgeColoring &c);

}  // namespace gsswb
