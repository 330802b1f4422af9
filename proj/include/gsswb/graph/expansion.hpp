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
#include <vector>

#include "gsswb/common/rational.hpp"
#include "gsswb/graph/graph.hpp"

namespace gsswb {

/// Largest vertex count accepted by the exhaustive subset routines.
inline constexpr size_t kExactVertexCap = 20;

/// Smallest external neighborhood per subset cardinality.
///
/// min_boundary[k] is the minimum of |N(U)| over all U with |U| = k, and
/// argmin[k] the numerically smallest bitmask attaining it (bit i = vertex i).
/// Index 0 is unused.
struct ExpansionProfile {
    size_t n = 0;
    std::vector<uint32_t> min_boundary;
    std::vector<uint32_t> argmin;

    /// min over k in [lo, hi] of min_boundary[k] / k, with the k attaining it
    /// (smallest k on ties).
    std::pair<Rational, size_t> min_ratio(size_t lo, size_t hi) const;
};

/// Enumerates all 2^n subsets. Throws SizeCapExceeded above kExactVertexCap.
ExpansionProfile expansion_profile_exact(const Graph &g);

/// min over nonempty U with |U| <= n/2 of |N(U)|/|U|. Requires 2 <= n <= cap.
Rational expansion_ratio_exact(const Graph &g);

/// Vertex ids in a subset bitmask, ascending.
VertexSet mask_to_vertices(uint32_t mask);

}  // namespace gsswb
