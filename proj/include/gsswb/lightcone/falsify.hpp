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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsswb/corruption/corruption.hpp"
#include "gsswb/graph/graph.hpp"
#include "gsswb/lightcone/circuit.hpp"
#include "gsswb/nonlocality/triangle.hpp"
#include "json.hpp"

namespace gsswb {

/// Good/bad split of the vertices of g by forward lightcone size.
struct GoodBadReport {
    VertexSet good;
    VertexSet bad;
    double threshold_coeff = 1;
    double threshold = 0;            // coeff * |V|^{1/16}
    size_t max_forward = 0;          // largest |L(x_v)|
    uint32_t depth = 0;
    uint32_t fan_in = 0;
    size_t outputs = 0;
    double counting_bound = 0;       // outputs * K^d / threshold
};

/// Inputs must be named xv:<v>, xe:<e> or r:<k> for vertices and edges of g,
/// outputs z:<v>; throws std::invalid_argument otherwise.
GoodBadReport classify_good_bad(const ClassicalCircuit &c, const Graph &g, double threshold_coeff = 1.0);

/// Output vertices reachable from each vertex bit: cones[v] lists the w with
/// z:<w> in L(xv:<v>), sorted.
std::vector<VertexSet> vertex_lightcones(const ClassicalCircuit &c, size_t num_vertices);

/// G' x K2 inside S: the largest component of the base graph on vertices
/// whose two copies are both present and marked usable.
struct ProductCore {
    Graph base;                                 // G', compact ids
    std::vector<std::array<Vertex, 2>> copies;  // base id -> S id in layer 0 / 1
    size_t paired = 0;                          // |H| before taking the component
};
ProductCore good_product_core(const Graph &s, const K2Pairing &pairing, const std::vector<uint8_t> &usable);

/// Square block of grid cells [row0, row0 + side) x [col0, col0 + side).
struct GridRegion {
    size_t row0 = 0;
    size_t col0 = 0;
    size_t side = 0;

    bool contains(size_t r, size_t c) const {
        return r >= row0 && r < row0 + side && c >= col0 && c < col0 + side;
    }
    std::vector<uint32_t> cells(size_t grid_cols) const;
};

struct Regions {
    size_t grid_side = 0;
    GridRegion P;  // upper left
    GridRegion Q;  // upper right
    GridRegion R;  // lower left
};
/// Corner regions of side floor(T/3). Throws std::invalid_argument if T < 3.
Regions select_regions(size_t grid_side);
/// Same for a square minor; throws on non-square minors.
Regions select_regions(const MinorEmbedding &m);
/// Both copies of every base vertex in the region's branch sets, sorted S ids.
VertexSet region_host_vertices(const MinorEmbedding &m, const ProductCore &core, const GridRegion &region);

struct BoxRegion {
    Vertex center = 0;            // base id in G'
    size_t center_row = 0;
    size_t center_col = 0;
    GridRegion cells;
    VertexSet base_vertices;      // G' ids, sorted
    VertexSet host_vertices;      // S ids, sorted
};

/// For every grid cell, a path inside its branch set joining the endpoints of
/// a horizontal and a vertical witness edge. Requires T >= 2.
std::vector<VertexSet> cross_paths(const Graph &base, const MinorEmbedding &m);

struct PqrSelection {
    std::array<BoxRegion, 3> boxes;  // p, q, r
    size_t tries = 0;
};

struct SelectionContext {
    const ProductCore &core;
    const MinorEmbedding &minor;
    const std::vector<VertexSet> &cones;  // per S vertex, see vertex_lightcones
    size_t box_side = 1;
};

/// Rejection-samples centres on cross paths in P, Q, R until every mark's
/// two-copy lightcone misses the other two boxes. Throws StageFailure
/// ("select_pqr") after max_tries.
PqrSelection select_pqr(const SelectionContext &ctx, const Regions &regions, uint64_t seed, size_t max_tries = 100);

struct CycleResult {
    TriangleSpec spec;               // over S ids
    VertexSet base_cycle;            // G' ids
    std::array<size_t, 3> channels{};  // available channels per pair pq, qr, pr
    size_t tries = 0;
};

/// Routes disjoint channels between the boxes, samples one per pair whose
/// outside vertices miss all three lightcones, closes the cycle inside the
/// boxes with an even base length and lifts it to the ladder in S. Routes
/// channels_per_pair rounds (0 means box_side). Throws StageFailure
/// ("channels" or "cycle") on exhaustion.
CycleResult build_cycle_through_boxes(const SelectionContext &ctx, const PqrSelection &sel, uint64_t seed,
                                      size_t max_tries = 100, size_t channels_per_pair = 0);

/// Empty when the cycle and boxes satisfy the disjointness conditions, the
/// cycle is even and the mark distances are even; else the first problem.
std::string selection_violation(const SelectionContext &ctx, const PqrSelection &sel, const CycleResult &cycle);

struct FalsifyOptions {
    double threshold_coeff = 1.0;
    size_t select_tries = 100;
    size_t channel_tries = 100;
    /// Channels routed per box pair; more than box_side gives the cycle
    /// stage more endpoint choices in small, sparse boxes.
    size_t channels_per_pair = 8;
    /// Fresh p, q, r selections tried when the cycle stage is exhausted.
    size_t selection_rounds = 3;
    uint64_t local_trials = 8;
    /// Corruption rate the host was built with; only used for the warning
    /// against the observed expansion bound.
    double epsilon = 0.01;
};

struct FalsifyReport {
    enum class Status { Violation, NoViolation, TooSmall, StageFailed };
    Status status = Status::StageFailed;
    std::string stage;        // failing stage, empty otherwise
    std::string detail;
    nlohmann::json diagnostics = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::optional<Violation> witness;
    BitVec witness_input;     // full input of the original circuit
    bool re_verified = false;
    size_t monotonicity_violations = 0;
    bool restriction_checked = false;
    LocalStrategyReport local;
};
std::string status_name(FalsifyReport::Status s);

/// Full pipeline against a circuit over S (outputs z:<v> for every vertex).
FalsifyReport falsify(const ClassicalCircuit &c, const Graph &s, const K2Pairing &pairing, uint64_t seed,
                      const FalsifyOptions &options = {});
/// Same pipeline with the exact quantum sampler standing in for the circuit;
/// its lightcones are treated as empty.
FalsifyReport falsify_oracle(const Graph &s, const K2Pairing &pairing, uint64_t seed,
                             const FalsifyOptions &options = {});

/// Product host S: a random d-regular base graph on n vertices, its K2
/// product, and a random eps fraction of product vertices removed.
struct FalsifyHost {
    Graph graph;
    K2Pairing pairing;
    size_t base_n = 0;
    VertexSet removed;   // product ids
};
FalsifyHost make_falsify_host(size_t n, size_t degree, double epsilon, uint64_t seed);

nlohmann::json good_bad_to_json(const GoodBadReport &r, bool with_sets = false);
nlohmann::json falsify_to_json(const FalsifyReport &r);

}  // namespace gsswb
