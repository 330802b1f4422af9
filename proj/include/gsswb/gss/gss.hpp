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
#include <map>
#include <string>

#include "gsswb/common/bitvec.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/graph/coloring.hpp"
#include "gsswb/graph/graph.hpp"
#include "gsswb/stabilizer/circuit.hpp"
#include "gsswb/stabilizer/support.hpp"
#include "json.hpp"

namespace gsswb {

/// A graph plus the input x: one basis bit per vertex (0 = X, 1 = Y) and one
/// activation bit per edge in canonical edge order.
struct GssInstance {
    Graph graph;
    BitVec x_vertex;
    BitVec x_edge;

    GssInstance() = default;
    /// All-zero input.
    explicit GssInstance(Graph g);
    GssInstance(Graph g, BitVec xv, BitVec xe);

    /// Wire format: vertex bits by id, then edge bits in canonical order.
    static GssInstance from_x(Graph g, const BitVec &x);
    BitVec x() const;

    /// Throws std::invalid_argument if bit lengths do not match the graph.
    void validate() const;
};

/// Layer accounting of the controlled circuit that prepares psi_x for every x:
/// a Hadamard layer, one controlled-CZ layer per edge color, a controlled-S
/// layer, a Hadamard layer.
struct DepthReport {
    uint32_t ccz_layers = 0;
    uint32_t total_layers = 0;
    /// Each CCZ / CS layer replaced by kDecomposedFactor two-qubit layers.
    uint32_t decomposed_layers = 0;
    uint32_t max_degree = 0;
    std::map<std::string, uint64_t> gate_counts;

    static constexpr uint32_t kDecomposedFactor = 5;
};

DepthReport plan_depth(const Graph &g, const EdgeColoring &coloring);
DepthReport plan_depth(const Graph &g);

/// H^n, CZ on active edges (grouped by color of `coloring`, canonical order
/// within a color), S on vertices with x_v = 1, H^n.
Circuit psi_circuit(const GssInstance &inst, const EdgeColoring &coloring);
Circuit psi_circuit(const GssInstance &inst);

/// Support of psi_x, from the stabilizer tableau.
AffineSupport psi_support(const GssInstance &inst);

struct SolveOptions {
    /// Up to this many qubits, sample by sequential single-qubit
    /// measurement; above it, draw a uniform member of the tableau support
    /// (the same distribution, since a stabilizer state is flat on its
    /// support).
    size_t measure_cutoff = 2048;
};

struct GssOutput {
    BitVec z;
    DepthReport depth;
    uint64_t seed = 0;
};

GssOutput solve_quantum(const GssInstance &inst, uint64_t seed, const SolveOptions &options = {});

/// True iff z lies in the support of psi_x. Throws std::invalid_argument on
/// a length mismatch.
bool verify(const GssInstance &inst, const BitVec &z);

/// Verifier that extracts the support once and answers many queries.
class GssVerifier {
   public:
    explicit GssVerifier(const GssInstance &inst);
    bool operator()(const BitVec &z) const;
    const AffineSupport &support() const {
        return support_;
    }

   private:
    AffineSupport support_;
};

/// log(s_size) / (32 log(fan_in)). Requires s_size >= 2 and fan_in >= 2.
double classical_depth_threshold(double s_size, double fan_in);

struct SubInstance {
    GssInstance instance;
    std::vector<Vertex> to_parent;
};

/// Instance on the induced subgraph of `keep`, keeping the bits of kept
/// vertices and of edges with both ends kept.
SubInstance subproblem(const GssInstance &inst, std::span<const Vertex> keep);

/// Independent bits: x_v = 1 with probability p_vertex, x_e = 1 with p_edge.
GssInstance random_instance(const Graph &g, Rng &rng, double p_vertex = 0.5, double p_edge = 0.5);

nlohmann::json depth_to_json(const DepthReport &d);
nlohmann::json instance_to_json(const GssInstance &inst);
/// Throws std::invalid_argument on malformed documents.
GssInstance instance_from_json(const nlohmann::json &j);
nlohmann::json output_to_json(const GssOutput &out);

}  // namespace gsswb
