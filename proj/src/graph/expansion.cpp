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

#include "gsswb/graph/expansion.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "gsswb/common/errors.hpp"
#include "gsswb/simd/kernels.hpp"

namespace gsswb {

ExpansionProfile expansion_profile_exact(const Graph &g) {
    size_t n = g.num_vertices();
    if (n > kExactVertexCap) {
        throw SizeCapExceeded("exact expansion enumeration", n, kExactVertexCap);
    }
    std::vector<uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; v++) {
        for (Vertex w : g.neighbors(v)) {
            adj[v] |= uint32_t{1} << w;
        }
    }

    // nb[mask] = union of neighbor masks of the members of mask. The upper
    // half of each doubling step is the lower half OR'd with one adjacency row.
    size_t total = size_t{1} << n;
    std::vector<uint32_t> nb(total, 0);
    const auto &k = simd::kernels();
    for (size_t v = 0; v < n; v++) {
        size_t half = size_t{1} << v;
        k.or_fill(nb.data() + half, nb.data(), half, adj[v]);
    }

    ExpansionProfile p;
    p.n = n;
    p.min_boundary.assign(n + 1, std::numeric_limits<uint32_t>::max());
    p.argmin.assign(n + 1, 0);
    p.min_boundary[0] = 0;
    for (uint32_t mask = 1; mask < total; mask++) {
        uint32_t size = static_cast<uint32_t>(std::popcount(mask));
        uint32_t boundary = static_cast<uint32_t>(std::popcount(nb[mask] & ~mask));
        if (boundary < p.min_boundary[size]) {
            p.min_boundary[size] = boundary;
            p.argmin[size] = mask;
        }
    }
    return p;
}

std::pair<Rational, size_t> ExpansionProfile::min_ratio(size_t lo, size_t hi) const {
    if (lo < 1 || hi > n || lo > hi) {
        throw std::invalid_argument(
            "cardinality interval [" + std::to_string(lo) + "," + std::to_string(hi) + "] invalid for n=" +
            std::to_string(n));
    }
    Rational best(min_boundary[lo], static_cast<int64_t>(lo));
    size_t at = lo;
    for (size_t k = lo + 1; k <= hi; k++) {
        Rational r(min_boundary[k], static_cast<int64_t>(k));
        if (r < best) {
            best = r;
            at = k;
        }
    }
    return {best, at};
}

Rational expansion_ratio_exact(const Graph &g) {
    size_t n = g.num_vertices();
    if (n < 2) {
        throw std::invalid_argument("expansion ratio needs at least 2 vertices");
    }
    return expansion_profile_exact(g).min_ratio(1, n / 2).first;
}

VertexSet mask_to_vertices(uint32_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace gsswb
