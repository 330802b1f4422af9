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

#include "gsswb/nonlocality/triangle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsswb/common/rng.hpp"

namespace gsswb {

X3 X3::parse(const std::string &s) {
    if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("x3 must be three bits like \"110\", got \"" + s + "\"");
    }
    return {s[0] == '1', s[1] == '1', s[2] == '1'};
}

namespace {

// Positions strictly between a and b along the direction that avoids c, in
// order starting next to a.
std::vector<size_t> arc_positions(size_t m, size_t a, size_t b, size_t c) {
    std::vector<size_t> fwd;
    for (size_t p = (a + 1) % m; p != b; p = (p + 1) % m) {
        if (p == c) {
            fwd.clear();
            std::vector<size_t> back;
            for (size_t q = (a + m - 1) % m; q != b; q = (q + m - 1) % m) {
                back.push_back(q);
            }
            return back;
        }
        fwd.push_back(p);
    }
    return fwd;
}

}  // namespace

TriangleSpec TriangleSpec::build(std::vector<Vertex> cycle, std::array<size_t, 3> marks) {
    size_t m = cycle.size();
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("triangle cycle length must be even and at least 4, got " + std::to_string(m));
    }
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("triangle cycle repeats a vertex");
    }
    for (size_t p : marks) {
        if (p >= m) {
            throw std::invalid_argument("mark position " + std::to_string(p) + " is not on a cycle of length " +
                                        std::to_string(m));
        }
    }
    if (marks[0] == marks[1] || marks[1] == marks[2] || marks[0] == marks[2]) {
        throw std::invalid_argument("marks must be three distinct cycle positions");
    }
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            size_t d = (marks[j] + m - marks[i]) % m;
            // M is even, so both directions around the cycle have the same parity.
            if (d % 2 != 0) {
                throw std::invalid_argument("marks at positions " + std::to_string(marks[i]) + " and " +
                                            std::to_string(marks[j]) + " are at odd cycle distance");
            }
        }
    }
    TriangleSpec s;
    s.cycle = std::move(cycle);
    s.marks = marks;
    auto fill = [&](size_t a, size_t b, size_t c, std::vector<Vertex> &all, std::vector<Vertex> &odd,
                    std::vector<Vertex> &even) {
        auto pos = arc_positions(m, a, b, c);
        size_t span = pos.size() + 1;  // arc distance from a to b
        for (size_t k = 0; k < pos.size(); k++) {
            size_t from_a = k + 1;
            size_t from_b = span - from_a;
            if (from_a % 2 != from_b % 2) {
                throw std::logic_error("arc parity depends on the reference mark");
            }
            Vertex vtx = s.cycle[pos[k]];
            all.push_back(vtx);
            (from_a % 2 == 1 ? odd : even).push_back(vtx);
        }
    };
    fill(marks[0], marks[1], marks[2], s.L, s.L_odd, s.L_even);
    fill(marks[1], marks[2], marks[0], s.R, s.R_odd, s.R_even);
    fill(marks[2], marks[0], marks[1], s.B, s.B_odd, s.B_even);
    if (s.L.size() + s.R.size() + s.B.size() + 3 != m) {
        throw std::logic_error("triangle arcs do not partition the cycle");
    }
    return s;
}

std::vector<std::pair<Vertex, Vertex>> TriangleSpec::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (size_t i = 0; i < cycle.size(); i++) {
        out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    return out;
}

void check_cycle_in_graph(const Graph &g, const TriangleSpec &spec) {
    for (Vertex v : spec.cycle) {
        g.check_vertex(v);
    }
    for (auto [a, b] : spec.edges()) {
        if (!g.has_edge(a, b)) {
            throw std::invalid_argument("cycle step " + std::to_string(a) + "-" + std::to_string(b) +
                                        " is not an edge of the graph");
        }
    }
}

GssInstance build_triangle_instance(const Graph &g, const TriangleSpec &spec, X3 x3) {
    check_cycle_in_graph(g, spec);
    GssInstance inst(g);
    for (auto [a, b] : spec.edges()) {
        inst.x_edge.set(*g.edge_id(a, b));
    }
    inst.x_vertex.set(spec.u(), x3.u);
    inst.x_vertex.set(spec.v(), x3.v);
    inst.x_vertex.set(spec.w(), x3.w);
    return inst;
}

namespace {

bool xor_over(const std::vector<Vertex> &vs, const BitVec &z) {
    bool p = false;
    for (Vertex v : vs) {
        p ^= z[v];
    }
    return p;
}

// Functional and required value of the case identity for x3, if any.
struct CaseIdentity {
    std::string name;
    char region;  // 'E' alone, or the region added to z_E
    bool value;
};

std::optional<CaseIdentity> case_identity(X3 x3) {
    switch (x3.index()) {
        case 0:
            return CaseIdentity{"case 000: z_E = 0", 'E', false};
        case 6:
            return CaseIdentity{"case 110: z_E + z_L = 1", 'L', true};
        case 5:
            return CaseIdentity{"case 101: z_E + z_B = 1", 'B', true};
        case 3:
            return CaseIdentity{"case 011: z_E + z_R = 1", 'R', true};
        default:
            return std::nullopt;
    }
}

const char *const kTriangleIdentity = "z_R + z_B + z_L = 0";

}  // namespace

ParityReport check_parity_identities(const TriangleSpec &spec, X3 x3, const BitVec &z) {
    ParityReport r;
    r.z_L = xor_over(spec.L_odd, z);
    r.z_R = xor_over(spec.R_odd, z);
    r.z_B = xor_over(spec.B_odd, z);
    r.z_E = z[spec.u()] ^ z[spec.v()] ^ z[spec.w()] ^ xor_over(spec.L_even, z) ^ xor_over(spec.R_even, z) ^
            xor_over(spec.B_even, z);
    r.triangle_ok = !(r.z_R ^ r.z_B ^ r.z_L);
    if (auto c = case_identity(x3)) {
        r.case_checked = x3.to_string();
        bool lhs = r.z_E;
        if (c->region == 'L') {
            lhs ^= r.z_L;
        } else if (c->region == 'B') {
            lhs ^= r.z_B;
        } else if (c->region == 'R') {
            lhs ^= r.z_R;
        }
        r.case_ok = lhs == c->value;
        if (!r.case_ok) {
            r.failed_identity = c->name;
        }
    }
    if (!r.triangle_ok) {
        r.failed_identity = kTriangleIdentity;
    }
    r.identities_ok = r.triangle_ok && r.case_ok;
    return r;
}

ParityFunctionals parity_functionals(const TriangleSpec &spec, size_t num_vertices) {
    ParityFunctionals f{BitVec(num_vertices), BitVec(num_vertices), BitVec(num_vertices), BitVec(num_vertices)};
    for (Vertex v : spec.L_odd) {
        f.L.set(v);
    }
    for (Vertex v : spec.R_odd) {
        f.R.set(v);
    }
    for (Vertex v : spec.B_odd) {
        f.B.set(v);
    }
    for (Vertex v : {spec.u(), spec.v(), spec.w()}) {
        f.E.set(v);
    }
    for (const auto *part : {&spec.L_even, &spec.R_even, &spec.B_even}) {
        for (Vertex v : *part) {
            f.E.set(v);
        }
    }
    return f;
}

std::string identities_on_support(const TriangleSpec &spec, X3 x3, const AffineSupport &support) {
    auto f = parity_functionals(spec, support.num_bits());
    auto holds = [&](const BitVec &fn, bool value) {
        for (const auto &b : support.basis()) {
            if (fn.dot(b)) {
                return false;
            }
        }
        return fn.dot(support.offset()) == value;
    };
    if (!holds(f.L ^ f.R ^ f.B, false)) {
        return kTriangleIdentity;
    }
    if (auto c = case_identity(x3)) {
        BitVec fn = f.E;
        if (c->region == 'L') {
            fn ^= f.L;
        } else if (c->region == 'B') {
            fn ^= f.B;
        } else if (c->region == 'R') {
            fn ^= f.R;
        }
        if (!holds(fn, c->value)) {
            return c->name;
        }
    }
    return {};
}

std::string variant_name(BruteforceVariant v) {
    switch (v) {
        case BruteforceVariant::Standard:
            return "standard";
        case BruteforceVariant::NoConstraint:
            return "no-constraint";
        case BruteforceVariant::ConstantQ:
            return "constant-q";
    }
    return "?";
}

BruteforceReport affine_bruteforce(BruteforceVariant variant) {
    // q(b1,b2,b3) = c ^ a.b with code (a1 a2 a3 c); qi(s,t) = c ^ a1 s ^ a2 t.
    auto q3 = [](unsigned code, unsigned b1, unsigned b2, unsigned b3) {
        return (code & 1) ^ (((code >> 1) & 1) & b1) ^ (((code >> 2) & 1) & b2) ^ (((code >> 3) & 1) & b3);
    };
    auto q2 = [](unsigned code, unsigned s, unsigned t) {
        return (code & 1) ^ (((code >> 1) & 1) & s) ^ (((code >> 2) & 1) & t);
    };
    BruteforceReport r;
    r.variant = variant;
    unsigned q_codes = variant == BruteforceVariant::ConstantQ ? 2 : 16;
    for (unsigned q = 0; q < q_codes; q++) {
        for (unsigned a = 0; a < 8; a++) {
            for (unsigned b = 0; b < 8; b++) {
                for (unsigned c = 0; c < 8; c++) {
                    r.combinations++;
                    bool constraint = true;
                    for (unsigned bits = 0; bits < 8 && constraint; bits++) {
                        unsigned b1 = (bits >> 2) & 1, b2 = (bits >> 1) & 1, b3 = bits & 1;
                        constraint = (q2(a, b2, b3) ^ q2(b, b1, b3) ^ q2(c, b1, b2)) == 0;
                    }
                    if (constraint) {
                        r.passing_constraint++;
                    }
                    if (!constraint && variant != BruteforceVariant::NoConstraint) {
                        continue;
                    }
                    bool all = q3(q, 0, 0, 0) == 0 && (q3(q, 0, 1, 1) ^ q2(a, 1, 1)) == 1 &&
                               (q3(q, 1, 0, 1) ^ q2(b, 1, 1)) == 1 && (q3(q, 1, 1, 0) ^ q2(c, 1, 1)) == 1;
                    r.satisfying += all;
                }
            }
        }
    }
    return r;
}

CircuitStrategy::CircuitStrategy(const ClassicalCircuit &c, const TriangleSpec &spec, size_t num_vertices) : c_(c) {
    std::array<Vertex, 3> marks{spec.u(), spec.v(), spec.w()};
    for (int i = 0; i < 3; i++) {
        mark_inputs_[i] = c.input_index("xv:" + std::to_string(marks[i]));
    }
    for (size_t i = 0; i < c.num_inputs(); i++) {
        if (c.input_names()[i].rfind("r:", 0) == 0) {
            random_inputs_.push_back(i);
        }
    }
    output_of_vertex_.resize(num_vertices);
    for (size_t v = 0; v < num_vertices; v++) {
        auto j = c.output_index("z:" + std::to_string(v));
        if (!j) {
            throw std::invalid_argument("strategy circuit has no output z:" + std::to_string(v));
        }
        output_of_vertex_[v] = *j;
    }
}

BitVec CircuitStrategy::respond(X3 x3, uint64_t r_seed) {
    BitVec in(c_.num_inputs());
    bool bits[3] = {x3.u, x3.v, x3.w};
    for (int i = 0; i < 3; i++) {
        if (mark_inputs_[i]) {
            in.set(*mark_inputs_[i], bits[i]);
        }
    }
    Rng rng(r_seed);
    for (size_t i : random_inputs_) {
        in.set(i, rng.coin());
    }
    auto out = c_.eval(in);
    BitVec z(output_of_vertex_.size());
    for (size_t v = 0; v < output_of_vertex_.size(); v++) {
        z.set(v, out[output_of_vertex_[v]]);
    }
    return z;
}

BitVec QuantumOracleStrategy::respond(X3 x3, uint64_t r_seed) {
    return solve_quantum(build_triangle_instance(g_, spec_, x3), r_seed).z;
}

LocalityReport check_locality(const ClassicalCircuit &c, const TriangleSpec &spec) {
    LocalityReport rep;
    std::array<Vertex, 3> marks{spec.u(), spec.v(), spec.w()};
    std::array<std::optional<size_t>, 3> mark_input;
    for (int i = 0; i < 3; i++) {
        mark_input[i] = c.input_index("xv:" + std::to_string(marks[i]));
    }
    auto cones = c.lightcones();
    auto reads = [&](size_t out, int mark) {
        if (!mark_input[mark]) {
            return false;
        }
        const auto &cone = cones.backward[out];
        return std::binary_search(cone.begin(), cone.end(), static_cast<uint32_t>(*mark_input[mark]));
    };
    auto check = [&](Vertex vtx, std::array<bool, 3> allowed, const char *where) {
        auto j = c.output_index("z:" + std::to_string(vtx));
        if (!j) {
            rep.ok = false;
            rep.violations.push_back("no output for cycle vertex " + std::to_string(vtx));
            return;
        }
        int count = 0;
        for (int m = 0; m < 3; m++) {
            if (reads(*j, m)) {
                count++;
                if (!allowed[m]) {
                    rep.ok = false;
                    rep.violations.push_back(std::string(where) + " vertex " + std::to_string(vtx) +
                                             " reads a far mark input");
                }
            }
        }
        if (count > 1) {
            rep.ok = false;
            rep.violations.push_back(std::string(where) + " vertex " + std::to_string(vtx) +
                                     " reads more than one mark input");
        }
    };
    check(spec.u(), {true, false, false}, "mark");
    check(spec.v(), {false, true, false}, "mark");
    check(spec.w(), {false, false, true}, "mark");
    for (Vertex x : spec.L) {
        check(x, {true, true, false}, "L");
    }
    for (Vertex x : spec.R) {
        check(x, {false, true, true}, "R");
    }
    for (Vertex x : spec.B) {
        check(x, {true, false, true}, "B");
    }
    return rep;
}

LocalStrategyReport test_local_strategy(Strategy &strategy, const Graph &g, const TriangleSpec &spec,
                                        const LocalStrategyOptions &options) {
    check_cycle_in_graph(g, spec);
    std::array<std::unique_ptr<GssVerifier>, 8> verifiers;
    LocalStrategyReport rep;
    for (uint64_t t = 0; t < options.trials; t++) {
        rep.trials++;
        uint64_t r_seed = derive_seed(options.seed, "r", t);
        for (unsigned i = 0; i < 8; i++) {
            X3 x3 = X3::from_index(i);
            auto z = strategy.respond(x3, r_seed);
            if (z.size() != g.num_vertices()) {
                throw std::invalid_argument("strategy answered " + std::to_string(z.size()) + " bits for " +
                                            std::to_string(g.num_vertices()) + " vertices");
            }
            rep.responses++;
            if (!verifiers[i]) {
                verifiers[i] = std::make_unique<GssVerifier>(build_triangle_instance(g, spec, x3));
            }
            bool valid = (*verifiers[i])(z);
            auto parity = check_parity_identities(spec, x3, z);
            if (valid && !parity.identities_ok) {
                throw std::logic_error("support member breaks " + parity.failed_identity);
            }
            if (valid) {
                continue;
            }
            rep.violations++;
            rep.violations_by_x3[i]++;
            if (!rep.first) {
                rep.first = Violation{x3, r_seed, z,
                                      parity.identities_ok ? std::string("support membership") : parity.failed_identity};
            }
            if (options.stop_at_first) {
                return rep;
            }
        }
    }
    return rep;
}

nlohmann::json spec_to_json(const TriangleSpec &spec) {
    return {{"cycle", spec.cycle},
            {"marks", {spec.marks[0], spec.marks[1], spec.marks[2]}},
            {"mark_vertices", {spec.u(), spec.v(), spec.w()}},
            {"L_odd", spec.L_odd},
            {"L_even", spec.L_even},
            {"R_odd", spec.R_odd},
            {"R_even", spec.R_even},
            {"B_odd", spec.B_odd},
            {"B_even", spec.B_even}};
}

nlohmann::json parity_to_json(const ParityReport &r) {
    return {{"z_L", int(r.z_L)},
            {"z_R", int(r.z_R)},
            {"z_B", int(r.z_B)},
            {"z_E", int(r.z_E)},
            {"identities_ok", r.identities_ok},
            {"case_checked", r.case_checked ? nlohmann::json(*r.case_checked) : nlohmann::json(nullptr)},
            {"failed_identity", r.failed_identity.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.failed_identity)}};
}

nlohmann::json violation_to_json(const Violation &v) {
    return {{"x3", v.x3.to_string()}, {"r_seed", v.r_seed}, {"z", v.z.to_string()}, {"failed_identity", v.failed_identity}};
}

nlohmann::json bruteforce_to_json(const BruteforceReport &r) {
    return {{"variant", variant_name(r.variant)},
            {"combinations", r.combinations},
            {"passing_constraint", r.passing_constraint},
            {"satisfying", r.satisfying}};
}

}  // namespace gsswb
