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

#include "gsswb/gss/gss.hpp"

#include <cmath>
#include <stdexcept>

#include "gsswb/graph/io.hpp"
#include "gsswb/stabilizer/tableau.hpp"

namespace gsswb {

GssInstance::GssInstance(Graph g) : graph(std::move(g)), x_vertex(graph.num_vertices()), x_edge(graph.num_edges()) {
}

GssInstance::GssInstance(Graph g, BitVec xv, BitVec xe) : graph(std::move(g)), x_vertex(std::move(xv)), x_edge(std::move(xe)) {
    validate();
}

GssInstance GssInstance::from_x(Graph g, const BitVec &x) {
    size_t nv = g.num_vertices();
    size_t ne = g.num_edges();
    if (x.size() != nv + ne) {
        throw std::invalid_argument("x has " + std::to_string(x.size()) + " bits, expected |V|+|E| = " +
                                    std::to_string(nv + ne));
    }
    BitVec xv(nv);
    BitVec xe(ne);
    for (size_t i = 0; i < nv; i++) {
        xv.set(i, x[i]);
    }
    for (size_t i = 0; i < ne; i++) {
        xe.set(i, x[nv + i]);
    }
    return GssInstance(std::move(g), std::move(xv), std::move(xe));
}

BitVec GssInstance::x() const {
    size_t nv = x_vertex.size();
    BitVec out(nv + x_edge.size());
    for (size_t i = 0; i < nv; i++) {
        out.set(i, x_vertex[i]);
    }
    for (size_t i = 0; i < x_edge.size(); i++) {
        out.set(nv + i, x_edge[i]);
    }
    return out;
}

void GssInstance::validate() const {
    if (x_vertex.size() != graph.num_vertices()) {
        throw std::invalid_argument("x_vertex has " + std::to_string(x_vertex.size()) + " bits for " +
                                    std::to_string(graph.num_vertices()) + " vertices");
    }
    if (x_edge.size() != graph.num_edges()) {
        throw std::invalid_argument("x_edge has " + std::to_string(x_edge.size()) + " bits for " +
                                    std::to_string(graph.num_edges()) + " edges");
    }
}

DepthReport plan_depth(const Graph &g, const EdgeColoring &coloring) {
    DepthReport d;
    d.ccz_layers = coloring.num_colors;
    d.max_degree = static_cast<uint32_t>(g.max_degree());
    // H, CCZ colors, CS, H.
    d.total_layers = d.ccz_layers + 3;
    d.decomposed_layers = 2 + DepthReport::kDecomposedFactor * (d.ccz_layers + 1);
    d.gate_counts["H"] = 2 * g.num_vertices();
    d.gate_counts["CCZ"] = g.num_edges();
    d.gate_counts["CS"] = g.num_vertices();
    return d;
}

DepthReport plan_depth(const Graph &g) {
    return plan_depth(g, edge_color(g));
}

Circuit psi_circuit(const GssInstance &inst, const EdgeColoring &coloring) {
    inst.validate();
    size_t n = inst.graph.num_vertices();
    Circuit c;
    for (uint32_t v = 0; v < n; v++) {
        c.push_back({GateKind::H, v});
    }
    for (const auto &cls : color_classes(coloring)) {
        for (EdgeId e : cls) {
            if (inst.x_edge[e]) {
                const auto &ed = inst.graph.edge(e);
                c.push_back({GateKind::CZ, ed.u, ed.v});
            }
        }
    }
    for (uint32_t v = 0; v < n; v++) {
        if (inst.x_vertex[v]) {
            c.push_back({GateKind::S, v});
        }
    }
    for (uint32_t v = 0; v < n; v++) {
        c.push_back({GateKind::H, v});
    }
    return c;
}

Circuit psi_circuit(const GssInstance &inst) {
    // CZ gates commute, so a single class in canonical order is as good as any.
    EdgeColoring one;
    one.color.assign(inst.graph.num_edges(), 0);
    one.num_colors = inst.graph.num_edges() == 0 ? 0 : 1;
    return psi_circuit(inst, one);
}

namespace {

Tableau psi_tableau(const GssInstance &inst, const EdgeColoring *coloring) {
    inst.validate();
    size_t n = inst.graph.num_vertices();
    Tableau t(n);
    t.h_all();
    auto apply_edge = [&](EdgeId e) {
        if (inst.x_edge[e]) {
            const auto &ed = inst.graph.edge(e);
            t.cz(ed.u, ed.v);
        }
    };
    if (coloring != nullptr) {
        for (const auto &cls : color_classes(*coloring)) {
            for (EdgeId e : cls) {
                apply_edge(e);
            }
        }
    } else {
        for (EdgeId e = 0; e < inst.graph.num_edges(); e++) {
            apply_edge(e);
        }
    }
    for (size_t v = 0; v < n; v++) {
        if (inst.x_vertex[v]) {
            t.s(v);
        }
    }
    t.h_all();
    return t;
}

}  // namespace

namespace {

BitVec lift_bits(const BitVec &sub, const std::vector<Vertex> &to_parent, size_t n) {
    BitVec out(n);
    for (size_t i = 0; i < to_parent.size(); i++) {
        if (sub[i]) {
            out.set(to_parent[i]);
        }
    }
    return out;
}

}  // namespace

AffineSupport psi_support(const GssInstance &inst) {
    inst.validate();
    size_t n = inst.graph.num_vertices();
    std::vector<uint8_t> touched(n, 0);
    for (EdgeId e = 0; e < inst.graph.num_edges(); e++) {
        if (inst.x_edge[e]) {
            touched[inst.graph.edge(e).u] = touched[inst.graph.edge(e).v] = 1;
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; v++) {
        if (touched[v]) {
            keep.push_back(v);
        }
    }
    if (keep.size() == n) {
        return psi_tableau(inst, nullptr).rows().support();
    }
    // A vertex without active edges is an independent qubit: H H |0> = |0>
    // when x_v = 0, and H S H |0> has both amplitudes nonzero when x_v = 1.
    std::vector<BitVec> basis, constraints;
    std::vector<uint8_t> rhs;
    BitVec offset(n);
    if (!keep.empty()) {
        auto sub = subproblem(inst, keep);
        auto part = psi_tableau(sub.instance, nullptr).rows().support();
        for (const auto &b : part.basis()) {
            basis.push_back(lift_bits(b, sub.to_parent, n));
        }
        for (size_t j = 0; j < part.constraints().size(); j++) {
            constraints.push_back(lift_bits(part.constraints()[j], sub.to_parent, n));
            rhs.push_back(part.rhs()[j]);
        }
        offset = lift_bits(part.offset(), sub.to_parent, n);
    }
    for (Vertex v = 0; v < n; v++) {
        if (touched[v]) {
            continue;
        }
        BitVec unit(n);
        unit.set(v);
        if (inst.x_vertex[v]) {
            basis.push_back(std::move(unit));
        } else {
            constraints.push_back(std::move(unit));
            rhs.push_back(0);
        }
    }
    return AffineSupport(n, std::move(basis), std::move(offset), std::move(constraints), std::move(rhs));
}

GssOutput solve_quantum(const GssInstance &inst, uint64_t seed, const SolveOptions &options) {
    auto coloring = edge_color(inst.graph);
    GssOutput out;
    out.depth = plan_depth(inst.graph, coloring);
    out.seed = seed;
    Rng rng(derive_seed(seed, "measure"));
    if (inst.graph.num_vertices() <= options.measure_cutoff) {
        out.z = psi_tableau(inst, &coloring).rows().measure_all(rng);
    } else {
        out.z = psi_support(inst).sample(rng);
    }
    return out;
}

bool verify(const GssInstance &inst, const BitVec &z) {
    inst.validate();
    if (z.size() != inst.graph.num_vertices()) {
        throw std::invalid_argument("z has " + std::to_string(z.size()) + " bits for " +
                                    std::to_string(inst.graph.num_vertices()) + " vertices");
    }
    return psi_support(inst).contains(z);
}

GssVerifier::GssVerifier(const GssInstance &inst) : support_(psi_support(inst)) {
}

bool GssVerifier::operator()(const BitVec &z) const {
    return support_.contains(z);
}

double classical_depth_threshold(double s_size, double fan_in) {
    if (!(s_size >= 2) || !(fan_in >= 2)) {
        throw std::invalid_argument("depth threshold needs |S| >= 2 and fan-in >= 2");
    }
    return std::log(s_size) / (32.0 * std::log(fan_in));
}

SubInstance subproblem(const GssInstance &inst, std::span<const Vertex> keep) {
    inst.validate();
    auto sub = induced_subgraph(inst.graph, keep);
    BitVec xv(sub.graph.num_vertices());
    for (size_t i = 0; i < sub.to_parent.size(); i++) {
        xv.set(i, inst.x_vertex[sub.to_parent[i]]);
    }
    BitVec xe(sub.graph.num_edges());
    for (EdgeId e = 0; e < sub.graph.num_edges(); e++) {
        const auto &ed = sub.graph.edge(e);
        auto parent = inst.graph.edge_id(sub.to_parent[ed.u], sub.to_parent[ed.v]);
        xe.set(e, inst.x_edge[*parent]);
    }
    return {GssInstance(std::move(sub.graph), std::move(xv), std::move(xe)), std::move(sub.to_parent)};
}

GssInstance random_instance(const Graph &g, Rng &rng, double p_vertex, double p_edge) {
    GssInstance inst(g);
    for (size_t v = 0; v < g.num_vertices(); v++) {
        inst.x_vertex.set(v, rng.unit() < p_vertex);
    }
    for (size_t e = 0; e < g.num_edges(); e++) {
        inst.x_edge.set(e, rng.unit() < p_edge);
    }
    return inst;
}

nlohmann::json depth_to_json(const DepthReport &d) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &[k, v] : d.gate_counts) {
        counts[k] = v;
    }
    return {{"ccz_layers", d.ccz_layers},
            {"total_layers", d.total_layers},
            {"decomposed_layers", d.decomposed_layers},
            {"max_degree", d.max_degree},
            {"gate_counts", counts}};
}

nlohmann::json instance_to_json(const GssInstance &inst) {
    return {{"graph", graph_to_json(inst.graph)},
            {"x_vertex", inst.x_vertex.to_string()},
            {"x_edge", inst.x_edge.to_string()}};
}

GssInstance instance_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("graph")) {
        throw std::invalid_argument("instance JSON needs a \"graph\" object");
    }
    auto g = graph_from_json(j.at("graph")).graph;
    auto bits = [&](const char *key, size_t n) {
        if (!j.contains(key)) {
            return BitVec(n);
        }
        if (!j.at(key).is_string()) {
            throw std::invalid_argument(std::string("instance field \"") + key + "\" must be a bit string");
        }
        return BitVec::from_string(j.at(key).get<std::string>());
    };
    auto xv = bits("x_vertex", g.num_vertices());
    auto xe = bits("x_edge", g.num_edges());
    return GssInstance(std::move(g), std::move(xv), std::move(xe));
}

nlohmann::json output_to_json(const GssOutput &out) {
    return {{"z", out.z.to_string()}, {"depth", depth_to_json(out.depth)}, {"seed", out.seed}};
}

}  // namespace gsswb
