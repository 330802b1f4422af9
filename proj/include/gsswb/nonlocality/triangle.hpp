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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsswb/common/bitvec.hpp"
#include "gsswb/graph/graph.hpp"
#include "gsswb/gss/gss.hpp"
#include "gsswb/lightcone/circuit.hpp"
#include "gsswb/stabilizer/support.hpp"
#include "json.hpp"

namespace gsswb {

/// Mark input bits (x_u, x_v, x_w). Index i in 0..7 encodes x_u x_v x_w as a
/// binary numeral, so index 6 is "110".
struct X3 {
    bool u = false;
    bool v = false;
    bool w = false;

    static X3 from_index(unsigned i) {
        return {((i >> 2) & 1) != 0, ((i >> 1) & 1) != 0, (i & 1) != 0};
    }
    unsigned index() const {
        return (unsigned(u) << 2) | (unsigned(v) << 1) | unsigned(w);
    }
    std::string to_string() const {
        return {char('0' + u), char('0' + v), char('0' + w)};
    }
    /// Parses "110" style strings.
    static X3 parse(const std::string &s);
};

/// An even cycle with three marks at pairwise even cycle distance, split into
/// the arcs L (u..v), R (v..w) and B (w..u), each arc excluding w, u and v
/// respectively. Every arc vertex is classed odd or even by its distance
/// along the arc to either bounding mark; both marks give the same parity and
/// this is checked on construction.
struct TriangleSpec {
    std::vector<Vertex> cycle;     // host vertex ids in cycle order
    std::array<size_t, 3> marks;   // cycle positions of u, v, w
    std::vector<Vertex> L, R, B;   // arc interiors, in cycle order from u/v/w
    std::vector<Vertex> L_odd, L_even, R_odd, R_even, B_odd, B_even;

    /// Throws std::invalid_argument on odd M, repeated cycle vertices, marks
    /// that coincide or lie off the cycle, or odd mark distances.
    static TriangleSpec build(std::vector<Vertex> cycle, std::array<size_t, 3> marks);

    size_t length() const {
        return cycle.size();
    }
    Vertex u() const {
        return cycle[marks[0]];
    }
    Vertex v() const {
        return cycle[marks[1]];
    }
    Vertex w() const {
        return cycle[marks[2]];
    }
    /// Cycle edges {cycle[i], cycle[i+1 mod M]}.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
};

/// Throws std::invalid_argument if consecutive cycle vertices are not
/// adjacent in g or a vertex is out of range.
void check_cycle_in_graph(const Graph &g, const TriangleSpec &spec);

/// Instance with x_e = 1 exactly on the cycle edges, the mark bits from x3 and
/// every other bit 0.
GssInstance build_triangle_instance(const Graph &g, const TriangleSpec &spec, X3 x3);

struct ParityReport {
    bool z_L = false, z_R = false, z_B = false, z_E = false;
    bool triangle_ok = false;        // z_R + z_B + z_L = 0
    std::optional<std::string> case_checked;  // "000", "110", "101", "011"
    bool case_ok = true;
    bool identities_ok = false;
    std::string failed_identity;     // empty when identities_ok
};

/// z is indexed by host vertex.
ParityReport check_parity_identities(const TriangleSpec &spec, X3 x3, const BitVec &z);

/// The four parities as vectors over the host vertices (indicator of the
/// summed positions).
struct ParityFunctionals {
    BitVec L, R, B, E;
};
ParityFunctionals parity_functionals(const TriangleSpec &spec, size_t num_vertices);

/// Checks the parity identities on every member of an affine support at
/// once: each identity is a linear functional plus a constant, so it holds on
/// the whole set iff the functional annihilates every basis vector and takes
/// the required value at the offset. Returns the first failing identity, or
/// an empty string.
std::string identities_on_support(const TriangleSpec &spec, X3 x3, const AffineSupport &support);

enum class BruteforceVariant { Standard, NoConstraint, ConstantQ };

struct BruteforceReport {
    BruteforceVariant variant;
    uint64_t combinations = 0;      // (q, q1, q2, q3) tuples enumerated
    uint64_t passing_constraint = 0;
    uint64_t satisfying = 0;        // passing the constraint and all four equalities
};

/// Exhaustive search over affine q : {0,1}^3 -> {0,1} and affine
/// q1, q2, q3 : {0,1}^2 -> {0,1}.
BruteforceReport affine_bruteforce(BruteforceVariant variant = BruteforceVariant::Standard);
std::string variant_name(BruteforceVariant v);

/// A classical responder for the triangle game: answers z (one bit per host
/// vertex) to the mark bits x3 given a random seed.
class Strategy {
   public:
    virtual ~Strategy() = default;
    virtual BitVec respond(X3 x3, uint64_t r_seed) = 0;
    virtual std::string name() const = 0;
};

/// Adapts a circuit with inputs "xv:<u>", "xv:<v>", "xv:<w>" (any may be
/// absent) plus "r:<k>" random bits, and outputs "z:<i>" for every host
/// vertex. Other inputs are held at 0. Random bits are drawn from Rng(r_seed)
/// in input order.
class CircuitStrategy : public Strategy {
   public:
    CircuitStrategy(const ClassicalCircuit &c, const TriangleSpec &spec, size_t num_vertices);
    BitVec respond(X3 x3, uint64_t r_seed) override;
    std::string name() const override {
        return "circuit";
    }

   private:
    const ClassicalCircuit &c_;
    std::array<std::optional<size_t>, 3> mark_inputs_;
    std::vector<size_t> random_inputs_;
    std::vector<size_t> output_of_vertex_;
};

/// Samples psi_x of the triangle instance exactly; never violates.
class QuantumOracleStrategy : public Strategy {
   public:
    QuantumOracleStrategy(const Graph &g, const TriangleSpec &spec) : g_(g), spec_(spec) {
    }
    BitVec respond(X3 x3, uint64_t r_seed) override;
    std::string name() const override {
        return "quantum-oracle";
    }

   private:
    const Graph &g_;
    const TriangleSpec &spec_;
};

/// Structural locality: each arc output reads at most one mark input, and only
/// a bounding mark of its arc; each mark output reads at most its own mark.
struct LocalityReport {
    bool ok = true;
    std::vector<std::string> violations;
};
LocalityReport check_locality(const ClassicalCircuit &c, const TriangleSpec &spec);

struct Violation {
    X3 x3;
    uint64_t r_seed = 0;
    BitVec z;
    std::string failed_identity;
};

struct LocalStrategyReport {
    uint64_t trials = 0;
    uint64_t responses = 0;
    uint64_t violations = 0;
    std::array<uint64_t, 8> violations_by_x3{};
    std::optional<Violation> first;

    double violation_rate() const {
        return responses == 0 ? 0.0 : double(violations) / double(responses);
    }
};

struct LocalStrategyOptions {
    uint64_t trials = 8;
    uint64_t seed = 0;
    /// Stop at the first violating response.
    bool stop_at_first = true;
};

/// For each trial a random seed r is drawn and all eight x3 are answered; a
/// response is a violation if it leaves the support of psi_x for the
/// triangle instance. Throws std::invalid_argument if a response has the
/// wrong length.
LocalStrategyReport test_local_strategy(Strategy &strategy, const Graph &g, const TriangleSpec &spec,
                                        const LocalStrategyOptions &options = {});

nlohmann::json spec_to_json(const TriangleSpec &spec);
nlohmann::json parity_to_json(const ParityReport &r);
nlohmann::json violation_to_json(const Violation &v);
nlohmann::json bruteforce_to_json(const BruteforceReport &r);

}  // namespace gsswb
