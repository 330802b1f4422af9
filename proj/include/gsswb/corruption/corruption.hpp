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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsswb/common/rational.hpp"
#include "gsswb/graph/graph.hpp"
#include "json.hpp"

namespace gsswb {

enum class CorruptionStrategy { Random, HighDegreeFirst, GreedyBoundaryMin, ExplicitList };

std::string_view strategy_name(CorruptionStrategy s);
/// Accepts "random", "high-degree-first", "greedy-boundary-min", "explicit-list".
CorruptionStrategy parse_strategy(std::string_view name);

struct CorruptionPlan {
    double epsilon = 0;
    CorruptionStrategy strategy = CorruptionStrategy::Random;
    VertexSet removed;  // caller-supplied for ExplicitList, filled in otherwise
};

/// floor(epsilon * n), robust to rounding just below an integer.
size_t corruption_budget(size_t n, double epsilon);

/// Number of BFS balls drawn per round by the greedy-boundary-min adversary,
/// and how many of the lowest-ratio balls vote on the next removals.
inline constexpr size_t kGreedySamples = 256;
inline constexpr size_t kGreedyVoters = 16;

/// Picks the removed set for a non-explicit strategy (sorted ascending).
VertexSet choose_removed(const Graph &g, double epsilon, CorruptionStrategy strategy, uint64_t seed);

/// Fills plan.removed (unless explicit), checks the budget and returns the
/// induced subgraph on the survivors. Throws std::invalid_argument for
/// epsilon outside [0, 1), an explicit list over budget, repeated or
/// out-of-range vertices.
Subgraph corrupt(const Graph &g, CorruptionPlan &plan, uint64_t seed);

struct GiantComponent {
    VertexSet vertices;  // sorted
    bool ok = false;     // |C| > original_n / 2
};
/// Largest component; equal sizes go to the one holding the smallest id.
GiantComponent giant_component(const Graph &g, size_t original_n);

struct GiantExpansionReport {
    size_t original_n = 0;
    size_t giant_size = 0;
    bool giant_ok = false;
    bool exact = false;                  // exhaustive interval check ran
    size_t lo = 0, hi = 0;               // interval [ceil(|C|/3), floor(2|C|/3)]
    std::optional<Rational> h_prime;     // largest h' passing (exact mode)
    std::optional<double> h_lower;       // spectral bound on C (otherwise)
    Rational target;
    bool passes = false;                 // h' >= target (exact) or h_lower > 0
};
/// Giant component of a corrupted graph and its expansion on the middle
/// interval, exhaustively when |C| <= kExactVertexCap and spectrally above.
GiantExpansionReport check_giant_expansion(const Graph &g, const Rational &target, size_t original_n);

struct TrimResult {
    Subgraph trimmed;
    VertexSet removed;   // Z, in the input's ids
    Rational h_prime;    // min ratio of the result over [1, |G'|/2]; 0 if |G'| < 2
    bool size_ok = false;  // |Z| < |V| / 3
    bool ok = false;       // size_ok and h_prime > 0
};
/// Repeatedly deletes the subset U with 1 <= |U| <= |G'|/2 of least
/// |N(U)|/|U| (smallest size, then smallest mask) while that ratio is below
/// target. Exhaustive: throws SizeCapExceeded above kExactVertexCap.
TrimResult trim_to_expander(const Graph &g, const Rational &target = Rational(1));

struct GridEdgeWitness {
    uint32_t a = 0;  // grid vertex index r * cols + c
    uint32_t b = 0;
    Edge host{};     // host.u in branch set a, host.v in branch set b
};

struct MinorEmbedding {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<VertexSet> branch_sets;   // indexed r * cols + c, sorted
    std::vector<GridEdgeWitness> edges;   // horizontal edges row by row, then vertical
};

/// Grid edges in witness order.
std::vector<std::pair<uint32_t, uint32_t>> grid_edge_list(size_t rows, size_t cols);

/// Empty when m is a valid grid minor of g, else the first problem found.
std::string minor_violation(const Graph &g, const MinorEmbedding &m);
bool validate_minor_embedding(const Graph &g, const MinorEmbedding &m);

/// Heuristic square grid minor. Binary search on the side t; each candidate
/// tries two landmark placements (far-apart greedy selection, then
/// coordinate cells) and routes every grid edge, rows first, by a
/// bidirectional BFS between the two branch sets through unused vertices.
/// Path vertices join the branch set on whose side they were reached.
/// Every result is validated; the fallback is the 1x1 minor on vertex 0.
/// Throws std::invalid_argument for an empty or disconnected graph.
MinorEmbedding embed_grid_minor(const Graph &g, uint64_t seed);

/// Attempts a single side; nullopt if routing fails for both placements.
std::optional<MinorEmbedding> embed_grid_side(const Graph &g, size_t t, uint64_t seed);

nlohmann::json minor_to_json(const MinorEmbedding &m);
nlohmann::json giant_expansion_to_json(const GiantExpansionReport &r);
nlohmann::json trim_to_json(const TrimResult &r);

}  // namespace gsswb
