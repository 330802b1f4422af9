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

#include "gsswb/cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "gsswb/common/errors.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/corruption/corruption.hpp"
#include "gsswb/corruption/experiment.hpp"
#include "gsswb/expander/expander.hpp"
#include "gsswb/graph/expansion.hpp"
#include "gsswb/graph/io.hpp"
#include "gsswb/gss/gss.hpp"
#include "gsswb/lightcone/falsify.hpp"
#include "gsswb/lightcone/generators.hpp"
#include "gsswb/nonlocality/triangle.hpp"

namespace gsswb::cli {

namespace {

using nlohmann::json;

struct Options {
    uint64_t seed = 1;
    size_t n = 1024;
    size_t degree = 8;
    double epsilon = 0.01;
    std::string strategy = "random";
    uint32_t fanin = 2;
    uint32_t depth = 0;
    size_t trials = 8;
    std::string out;
    bool timing = false;
    unsigned threads = 1;
    std::string circuit;
    std::string graph;
    std::string instance;
    std::string z;
    std::string output;
    std::string x;
    std::string removed;
    std::string family = "zeros";
    std::string variant = "standard";
    std::string format = "json";
    std::string marks;
    std::string x3;
    std::string sizes = "1024,4096,16384";
    std::string strategies = "random,high-degree-first,greedy-boundary-min";
    std::string depth_sizes = "100,1000,10000";
    bool product = false;
    bool oracle = false;
    double threshold_coeff = 1.0;
    double p_vertex = 0.5;
    double p_edge = 0.5;
    size_t m = 12;
    size_t samples = 64;
    size_t measure_cutoff = 2048;
};

/// An input problem detected by a command body (exit code 2).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    json result;
    json seeds = json::object();
    std::string summary;
    int code = kExitOk;
    /// Artifact for --out instead of the report.
    std::optional<std::string> artifact;
};

json read_json_file(const std::string &path) {
    if (path.empty()) {
        throw InputError("missing input file");
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InputError(path + ": " + e.what());
    }
}

// Accepts a bare document or a report envelope whose result carries `key`.
json unwrap(json doc, const std::string &key) {
    if (doc.is_object() && doc.contains("tool") && doc.contains("result") && doc["result"].contains(key)) {
        return doc["result"][key];
    }
    return doc;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << text;
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<size_t> parse_sizes(const std::string &s, const char *what) {
    std::vector<size_t> out;
    for (const auto &item : split_list(s)) {
        try {
            size_t pos = 0;
            out.push_back(std::stoull(item, &pos));
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw InputError(std::string("bad entry '") + item + "' in " + what);
        }
    }
    return out;
}

GraphWithPairing load_graph(const Options &o) {
    return graph_from_json(unwrap(read_json_file(o.graph), "graph"));
}

// Graph from --graph, or a random regular graph from --n/--degree/--seed.
Graph graph_or_generated(const Options &o, Outcome &res) {
    if (!o.graph.empty()) {
        return load_graph(o).graph;
    }
    uint64_t s = derive_seed(o.seed, "graph");
    res.seeds["graph"] = s;
    return random_regular_graph(o.n, o.degree, s);
}

GssInstance load_instance(const Options &o) {
    if (!o.instance.empty()) {
        return instance_from_json(unwrap(read_json_file(o.instance), "instance"));
    }
    if (!o.graph.empty()) {
        auto g = load_graph(o).graph;
        if (o.x.empty()) {
            return GssInstance(std::move(g));
        }
        return GssInstance::from_x(std::move(g), BitVec::from_string(o.x));
    }
    throw InputError("need --instance or --graph");
}

json graph_summary(const Graph &g) {
    return {{"n", g.num_vertices()},
            {"edges", g.num_edges()},
            {"min_degree", g.num_vertices() ? g.min_degree() : 0},
            {"max_degree", g.num_vertices() ? g.max_degree() : 0},
            {"connected", is_connected(g)}};
}

Outcome cmd_generate(const Options &o) {
    Outcome res;
    Graph g;
    std::optional<K2Pairing> pairing;
    if (o.product) {
        auto host = make_falsify_host(o.n, o.degree, o.epsilon, o.seed);
        res.seeds["graph"] = derive_seed(o.seed, "graph");
        res.seeds["corruption"] = derive_seed(o.seed, "corruption");
        res.result["removed"] = host.removed.size();
        g = std::move(host.graph);
        pairing = std::move(host.pairing);
    } else {
        res.seeds["graph"] = derive_seed(o.seed, "graph");
        g = random_regular_graph(o.n, o.degree, derive_seed(o.seed, "graph"));
    }
    res.result["graph_summary"] = graph_summary(g);
    std::string text;
    if (o.format == "dot") {
        text = graph_to_dot(g);
    } else if (o.format == "json") {
        text = graph_to_json(g, pairing ? &*pairing : nullptr).dump() + "\n";
    } else {
        throw InputError("unknown format '" + o.format + "' (json, dot)");
    }
    if (o.out.empty()) {
        res.result["graph"] = o.format == "dot" ? json(text) : json::parse(text);
    } else {
        res.artifact = text;
    }
    res.summary = "generated " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
                  " edges";
    return res;
}

Outcome cmd_certify(const Options &o) {
    Outcome res;
    auto g = graph_or_generated(o, res);
    auto cert = certify_expander(g);
    res.result["graph_summary"] = graph_summary(g);
    res.result["certificate"] = certificate_to_json(cert);
    res.summary = std::string(cert.valid ? "expander" : "not certified") + ", h_lower " + std::to_string(cert.h_lower);
    res.code = cert.valid ? kExitOk : kExitVerificationFailed;
    return res;
}

Outcome cmd_corrupt(const Options &o) {
    Outcome res;
    std::optional<K2Pairing> pairing;
    Graph g;
    if (!o.graph.empty()) {
        auto gp = load_graph(o);
        g = std::move(gp.graph);
        pairing = std::move(gp.pairing);
    } else {
        g = graph_or_generated(o, res);
    }
    CorruptionPlan plan;
    plan.epsilon = o.epsilon;
    plan.strategy = parse_strategy(o.strategy);
    if (plan.strategy == CorruptionStrategy::ExplicitList) {
        for (size_t v : parse_sizes(o.removed, "--removed")) {
            plan.removed.push_back(static_cast<Vertex>(v));
        }
    }
    uint64_t cs = derive_seed(o.seed, "corruption");
    res.seeds["corruption"] = cs;
    auto sub = corrupt(g, plan, cs);
    auto giant = giant_component(sub.graph, g.num_vertices());
    auto core = induced_subgraph(sub.graph, giant.vertices);
    double h = core.graph.num_vertices() >= 2 ? spectral_h_lower(core.graph, kTrialSpectral) : 0.0;
    res.result = {{"n", g.num_vertices()},
                  {"budget", corruption_budget(g.num_vertices(), o.epsilon)},
                  {"strategy", strategy_name(plan.strategy)},
                  {"removed", plan.removed},
                  {"remaining", sub.graph.num_vertices()},
                  {"giant_size", giant.vertices.size()},
                  {"giant_ok", giant.ok},
                  {"h_lower", h},
                  {"epsilon_threshold", h / 6}};
    if (core.graph.num_vertices() <= kExactVertexCap && core.graph.num_vertices() > 0) {
        res.result["giant_expansion"] = giant_expansion_to_json(check_giant_expansion(core.graph, Rational(1), g.num_vertices()));
    }
    if (!o.out.empty()) {
        std::optional<K2Pairing> kept;
        if (pairing) {
            kept = restrict_pairing(*pairing, sub);
        }
        res.artifact = graph_to_json(sub.graph, kept ? &*kept : nullptr).dump() + "\n";
    }
    res.summary = "removed " + std::to_string(plan.removed.size()) + ", giant " +
                  std::to_string(giant.vertices.size()) + "/" + std::to_string(g.num_vertices());
    res.code = giant.ok ? kExitOk : kExitVerificationFailed;
    return res;
}

Outcome cmd_minor(const Options &o) {
    Outcome res;
    auto g = graph_or_generated(o, res);
    uint64_t ms = derive_seed(o.seed, "minor");
    res.seeds["minor"] = ms;
    auto m = embed_grid_minor(g, ms);
    auto problem = minor_violation(g, m);
    res.result = {{"side", m.rows}, {"valid", problem.empty()}, {"minor", minor_to_json(m)}};
    res.summary = std::to_string(m.rows) + "x" + std::to_string(m.cols) + " grid minor" +
                  (problem.empty() ? "" : " INVALID: " + problem);
    res.code = problem.empty() ? kExitOk : kExitVerificationFailed;
    return res;
}

Outcome cmd_instance(const Options &o) {
    Outcome res;
    auto g = graph_or_generated(o, res);
    uint64_t is = derive_seed(o.seed, "instance");
    res.seeds["instance"] = is;
    Rng rng(is);
    auto inst = random_instance(g, rng, o.p_vertex, o.p_edge);
    auto doc = instance_to_json(inst);
    if (o.out.empty()) {
        res.result["instance"] = doc;
    } else {
        res.artifact = doc.dump() + "\n";
        res.result["instance_summary"] = {{"n", g.num_vertices()}, {"edges", g.num_edges()}};
    }
    res.summary = "instance on " + std::to_string(g.num_vertices()) + " vertices";
    return res;
}

Outcome cmd_solve(const Options &o) {
    Outcome res;
    auto inst = load_instance(o);
    SolveOptions so;
    so.measure_cutoff = o.measure_cutoff;
    auto sol = solve_quantum(inst, o.seed, so);
    bool ok = verify(inst, sol.z);
    res.seeds["measure"] = o.seed;
    res.result = output_to_json(sol);
    res.result["verified"] = ok;
    res.summary = "z = " + (sol.z.size() <= 64 ? sol.z.to_string() : std::to_string(sol.z.popcount()) + " ones") +
                  (ok ? " (valid)" : " (INVALID)");
    res.code = ok ? kExitOk : kExitVerificationFailed;
    return res;
}

Outcome cmd_verify(const Options &o) {
    Outcome res;
    auto inst = load_instance(o);
    std::string bits = o.z;
    if (bits.empty() && !o.output.empty()) {
        auto doc = unwrap(read_json_file(o.output), "z");
        if (doc.is_object() && doc.contains("z")) {
            doc = doc["z"];
        }
        if (!doc.is_string()) {
            throw InputError(o.output + ": no z bit string");
        }
        bits = doc.get<std::string>();
    }
    if (bits.empty()) {
        throw InputError("need --z or --output");
    }
    auto z = BitVec::from_string(bits);
    bool ok = verify(inst, z);
    res.result = {{"verdict", ok ? "VALID" : "INVALID"}, {"n", inst.graph.num_vertices()}, {"z", bits}};
    res.summary = ok ? "VALID" : "INVALID";
    res.code = ok ? kExitOk : kExitVerificationFailed;
    return res;
}

Outcome cmd_triangle(const Options &o) {
    Outcome res;
    size_t m = o.m;
    std::array<size_t, 3> marks{};
    if (o.marks.empty()) {
        size_t step = (m / 3) & ~size_t{1};
        marks = {0, step, 2 * step};
    } else {
        auto list = parse_sizes(o.marks, "--marks");
        if (list.size() != 3) {
            throw InputError("--marks needs three cycle positions");
        }
        marks = {list[0], list[1], list[2]};
    }
    std::vector<Vertex> cycle(m);
    for (Vertex i = 0; i < m; i++) {
        cycle[i] = i;
    }
    auto spec = TriangleSpec::build(cycle, marks);
    auto g = cycle_graph(m);
    std::vector<unsigned> cases;
    if (o.x3.empty()) {
        for (unsigned i = 0; i < 8; i++) {
            cases.push_back(i);
        }
    } else {
        cases.push_back(X3::parse(o.x3).index());
    }
    uint64_t ts = derive_seed(o.seed, "triangle");
    res.seeds["triangle"] = ts;
    json rows = json::array();
    size_t failures = 0;
    for (unsigned i : cases) {
        X3 x3 = X3::from_index(i);
        auto inst = build_triangle_instance(g, spec, x3);
        auto support = psi_support(inst);
        std::string exact = identities_on_support(spec, x3, support);
        size_t bad = 0;
        for (size_t k = 0; k < o.samples; k++) {
            auto z = solve_quantum(inst, derive_seed(ts, x3.to_string(), k)).z;
            if (!check_parity_identities(spec, x3, z).identities_ok) {
                bad++;
            }
        }
        failures += bad + (exact.empty() ? 0 : 1);
        rows.push_back({{"x3", x3.to_string()},
                        {"support_rank", support.rank()},
                        {"support_check", exact.empty() ? json("ok") : json(exact)},
                        {"samples", o.samples},
                        {"sample_failures", bad}});
    }
    res.result = {{"spec", spec_to_json(spec)}, {"cases", rows}, {"failures", failures}};
    res.summary = std::to_string(failures) + " parity failures over " + std::to_string(cases.size()) + " inputs";
    res.code = failures == 0 ? kExitOk : kExitVerificationFailed;
    return res;
}

Outcome cmd_bruteforce(const Options &o) {
    Outcome res;
    BruteforceVariant v;
    if (o.variant == "standard") {
        v = BruteforceVariant::Standard;
    } else if (o.variant == "no-constraint") {
        v = BruteforceVariant::NoConstraint;
    } else if (o.variant == "constant-q") {
        v = BruteforceVariant::ConstantQ;
    } else {
        throw InputError("unknown variant '" + o.variant + "' (standard, no-constraint, constant-q)");
    }
    auto rep = affine_bruteforce(v);
    res.result = bruteforce_to_json(rep);
    res.summary = std::to_string(rep.satisfying) + " / " + std::to_string(rep.combinations) + " satisfying";
    res.result["summary"] = res.summary;
    return res;
}

Outcome cmd_make_circuit(const Options &o) {
    Outcome res;
    auto g = graph_or_generated(o, res);
    auto fam = parse_family(o.family);
    uint64_t cs = derive_seed(o.seed, "circuit-family");
    res.seeds["circuit"] = cs;
    auto c = make_circuit(fam, g, o.fanin, o.depth, cs);
    size_t cone = max_backward_lightcone(c);
    res.result["circuit_summary"] = {{"family", family_name(fam)},
                                     {"inputs", c.num_inputs()},
                                     {"gates", c.num_gates()},
                                     {"outputs", c.outputs().size()},
                                     {"depth", c.depth()},
                                     {"fan_in", c.fan_in()},
                                     {"max_backward_lightcone", cone},
                                     {"lightcone_bound", std::pow(double(c.fan_in()), double(c.depth()))}};
    if (o.out.empty()) {
        res.result["circuit"] = c.to_json();
    } else {
        res.artifact = c.to_json().dump() + "\n";
    }
    res.summary = std::string(family_name(fam)) + " circuit, depth " + std::to_string(c.depth()) + ", " +
                  std::to_string(c.num_gates()) + " gates";
    return res;
}

ClassicalCircuit load_circuit(const Options &o) {
    return ClassicalCircuit::from_json(unwrap(read_json_file(o.circuit), "circuit"));
}

Outcome cmd_classify(const Options &o) {
    Outcome res;
    auto g = load_graph(o).graph;
    auto c = load_circuit(o);
    auto rep = classify_good_bad(c, g, o.threshold_coeff);
    res.result = good_bad_to_json(rep, true);
    json sweep = json::array();
    for (double coeff : {0.5, 1.0, 2.0}) {
        sweep.push_back(good_bad_to_json(classify_good_bad(c, g, coeff)));
    }
    res.result["sweep"] = sweep;
    res.summary = std::to_string(rep.bad.size()) + " bad of " + std::to_string(g.num_vertices()) +
                  " (bound " + std::to_string(rep.counting_bound) + ")";
    return res;
}

Outcome cmd_falsify(const Options &o) {
    Outcome res;
    auto gp = load_graph(o);
    if (!gp.pairing) {
        throw InputError(o.graph + ": graph has no K2 pairing");
    }
    FalsifyOptions fo;
    fo.threshold_coeff = o.threshold_coeff;
    fo.epsilon = o.epsilon;
    fo.local_trials = o.trials;
    res.seeds = {{"minor", derive_seed(o.seed, "minor")},
                 {"select", derive_seed(o.seed, "select", 0)},
                 {"cycle", derive_seed(o.seed, "cycle", 0)},
                 {"local", derive_seed(o.seed, "local")}};
    FalsifyReport rep;
    if (o.oracle) {
        rep = falsify_oracle(gp.graph, *gp.pairing, o.seed, fo);
    } else {
        if (o.circuit.empty()) {
            throw InputError("need --circuit or --oracle");
        }
        rep = falsify(load_circuit(o), gp.graph, *gp.pairing, o.seed, fo);
    }
    res.result = falsify_to_json(rep);
    res.summary = status_name(rep.status);
    if (rep.witness) {
        res.summary += " at x3=" + rep.witness->x3.to_string() + (rep.re_verified ? " (re-verified)" : "");
    }
    if (!rep.stage.empty()) {
        res.summary += " [" + rep.stage + "] " + rep.detail;
    }
    bool failed = rep.status == FalsifyReport::Status::StageFailed || rep.status == FalsifyReport::Status::TooSmall;
    res.code = failed ? kExitStageFailure : kExitOk;
    return res;
}

std::string scaling_markdown(const std::vector<ScalingRow> &rows, const json &slopes, const json &depth) {
    std::ostringstream md;
    md << "| strategy | n | trials | giant ok | t median | t min | t max |\n";
    md << "|---|---|---|---|---|---|---|\n";
    for (const auto &r : rows) {
        md << "| " << r.strategy << " | " << r.n << " | " << r.trials << " | " << r.giant_rate << " | " << r.t_median
           << " | " << r.t_min << " | " << r.t_max << " |\n";
    }
    md << "\n| strategy | log-log slope |\n|---|---|\n";
    for (auto it = slopes.begin(); it != slopes.end(); ++it) {
        md << "| " << it.key() << " | " << it.value().dump() << " |\n";
    }
    md << "\n| base n | total layers | ccz layers | max degree |\n|---|---|---|---|\n";
    for (const auto &row : depth) {
        md << "| " << row["n"] << " | " << row["total_layers"] << " | " << row["ccz_layers"] << " | "
           << row["max_degree"] << " |\n";
    }
    return md.str();
}

Outcome cmd_scaling(const Options &o) {
    Outcome res;
    auto sizes = parse_sizes(o.sizes, "--sizes");
    std::vector<CorruptionStrategy> strategies;
    for (const auto &name : split_list(o.strategies)) {
        strategies.push_back(parse_strategy(name));
    }
    auto configs = sweep_configs(o.seed, sizes, strategies, o.trials, o.degree, o.epsilon);
    res.seeds["trials"] = "derive_seed(root, \"trial\", i)";
    auto start = std::chrono::steady_clock::now();
    auto reports = run_trials(configs, o.threads, o.timing);
    auto rows = aggregate(reports);
    json slopes = json::object();
    for (auto s : strategies) {
        auto slope = loglog_slope(rows, std::string(strategy_name(s)));
        slopes[std::string(strategy_name(s))] = slope ? json(*slope) : json(nullptr);
    }
    json depth = json::array();
    for (size_t n : parse_sizes(o.depth_sizes, "--depth-sizes")) {
        auto base = random_regular_graph(n, o.degree, derive_seed(o.seed, "depth", n));
        auto d = plan_depth(product_k2(base).first);
        auto row = depth_to_json(d);
        row["n"] = n;
        depth.push_back(row);
    }
    json trials = json::array();
    for (const auto &r : reports) {
        trials.push_back(trial_to_json(r));
    }
    json table = json::array();
    for (const auto &r : rows) {
        table.push_back({{"strategy", r.strategy},
                         {"n", r.n},
                         {"trials", r.trials},
                         {"giant_ok_rate", r.giant_rate},
                         {"t_median", r.t_median},
                         {"t_min", r.t_min},
                         {"t_max", r.t_max}});
    }
    res.result = {{"rows", table}, {"slopes", slopes}, {"depth", depth}, {"trials", trials}};
    if (o.timing) {
        res.result["wall_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        write_file(o.out + "/scaling.csv", scaling_csv(rows));
        write_file(o.out + "/scaling.md", scaling_markdown(rows, slopes, depth));
    }
    res.summary = std::to_string(reports.size()) + " trials, slopes " + slopes.dump();
    return res;
}

struct Command {
    const char *name;
    const char *group;
    const char *help;
    std::function<Outcome(const Options &)> body;
    std::function<void(CLI::App &, Options &)> flags;
};

void seed_flag(CLI::App &a, Options &o) {
    a.add_option("--seed", o.seed, "root seed");
}
void graph_gen_flags(CLI::App &a, Options &o) {
    a.add_option("--graph", o.graph, "graph JSON file (otherwise a random regular graph)");
    a.add_option("--n", o.n, "vertices of the generated graph");
    a.add_option("--degree", o.degree, "degree of the generated graph");
    seed_flag(a, o);
}
void instance_flags(CLI::App &a, Options &o) {
    a.add_option("--instance", o.instance, "instance JSON file");
    a.add_option("--graph", o.graph, "graph JSON file (all-zero input unless --x)");
    a.add_option("--x", o.x, "input bits: vertex bits then edge bits");
}

std::vector<Command> commands() {
    return {
        {"generate", "expander", "random regular graph, or a corrupted K2 product host with --product", cmd_generate,
         [](CLI::App &a, Options &o) {
             a.add_option("--n", o.n, "base vertices");
             a.add_option("--degree", o.degree, "degree");
             a.add_option("--epsilon", o.epsilon, "corruption rate of the product host");
             a.add_flag("--product", o.product, "emit G x K2 minus a random epsilon fraction, with pairing");
             a.add_option("--format", o.format, "json or dot");
             a.add_option("--out", o.out, "write the graph here");
             seed_flag(a, o);
         }},
        {"certify", "expander", "expansion certificate", cmd_certify, graph_gen_flags},
        {"corrupt", "corruption", "remove an epsilon fraction and inspect the giant component", cmd_corrupt,
         [](CLI::App &a, Options &o) {
             graph_gen_flags(a, o);
             a.add_option("--epsilon", o.epsilon, "corruption rate");
             a.add_option("--strategy", o.strategy,
                          "random, high-degree-first, greedy-boundary-min or explicit-list");
             a.add_option("--removed", o.removed, "comma separated vertices for explicit-list");
             a.add_option("--out", o.out, "write the corrupted graph here");
         }},
        {"minor", "corruption", "validated grid minor", cmd_minor, graph_gen_flags},
        {"scaling", "corruption", "corruption sweep and depth constancy", cmd_scaling,
         [](CLI::App &a, Options &o) {
             seed_flag(a, o);
             a.add_option("--sizes", o.sizes, "comma separated n");
             a.add_option("--strategies", o.strategies, "comma separated adversaries");
             a.add_option("--trials", o.trials, "seeds per (strategy, n)");
             a.add_option("--degree", o.degree, "degree");
             a.add_option("--epsilon", o.epsilon, "corruption rate");
             a.add_option("--depth-sizes", o.depth_sizes, "base sizes for the depth table");
             a.add_option("--threads", o.threads, "worker threads (0 = hardware)");
             a.add_flag("--timing", o.timing, "record runtimes (breaks byte-identical output)");
             a.add_option("--out", o.out, "directory for scaling.csv and scaling.md");
         }},
        {"instance", "gss", "random instance on a graph", cmd_instance,
         [](CLI::App &a, Options &o) {
             graph_gen_flags(a, o);
             a.add_option("--p-vertex", o.p_vertex, "probability of x_v = 1");
             a.add_option("--p-edge", o.p_edge, "probability of x_e = 1");
             a.add_option("--out", o.out, "write the instance here");
         }},
        {"solve", "gss", "sample the quantum solver", cmd_solve,
         [](CLI::App &a, Options &o) {
             instance_flags(a, o);
             seed_flag(a, o);
             a.add_option("--measure-cutoff", o.measure_cutoff, "sequential measurement up to this many qubits");
             a.add_option("--out", o.out, "write the report here");
         }},
        {"verify", "gss", "check an output against an instance", cmd_verify,
         [](CLI::App &a, Options &o) {
             instance_flags(a, o);
             a.add_option("--z", o.z, "output bits");
             a.add_option("--output", o.output, "solve report or output JSON holding z");
             a.add_option("--out", o.out, "write the report here");
         }},
        {"triangle", "nonlocality", "parity identities on an even triangle cycle", cmd_triangle,
         [](CLI::App &a, Options &o) {
             a.add_option("--m", o.m, "cycle length (even)");
             a.add_option("--marks", o.marks, "three cycle positions, pairwise even distance");
             a.add_option("--x3", o.x3, "single case such as 110 (default all eight)");
             a.add_option("--trials", o.samples, "sampled outputs per case");
             seed_flag(a, o);
             a.add_option("--out", o.out, "write the report here");
         }},
        {"bruteforce", "nonlocality", "affine strategy brute force", cmd_bruteforce,
         [](CLI::App &a, Options &o) {
             a.add_option("--variant", o.variant, "standard, no-constraint or constant-q");
             a.add_option("--out", o.out, "write the report here");
         }},
        {"make-circuit", "lightcone", "corpus circuit over a graph", cmd_make_circuit,
         [](CLI::App &a, Options &o) {
             graph_gen_flags(a, o);
             a.add_option("--family", o.family, "zeros, copy, parity or random");
             a.add_option("--fanin", o.fanin, "fan-in K");
             a.add_option("--depth", o.depth, "depth of random circuits");
             a.add_option("--out", o.out, "write the circuit here");
         }},
        {"classify", "lightcone", "good and bad vertices of a circuit", cmd_classify,
         [](CLI::App &a, Options &o) {
             a.add_option("--circuit", o.circuit, "circuit JSON")->required();
             a.add_option("--graph", o.graph, "graph JSON")->required();
             a.add_option("--threshold-coeff", o.threshold_coeff, "good iff |L(x_v)| <= coeff |V|^(1/16)");
             a.add_option("--out", o.out, "write the report here");
         }},
        {"falsify", "lightcone", "search a triangle restriction on which a circuit fails", cmd_falsify,
         [](CLI::App &a, Options &o) {
             a.add_option("--circuit", o.circuit, "circuit JSON");
             a.add_flag("--oracle", o.oracle, "test the exact quantum sampler instead");
             a.add_option("--graph", o.graph, "product host JSON with pairing")->required();
             a.add_option("--threshold-coeff", o.threshold_coeff, "good/bad threshold coefficient");
             a.add_option("--epsilon", o.epsilon, "corruption rate the host was built with");
             a.add_option("--trials", o.trials, "random strings per case");
             seed_flag(a, o);
             a.add_option("--out", o.out, "write the report here");
         }},
    };
}

json echo_config(const CLI::App &sub) {
    json config = json::object();
    for (const auto *opt : sub.get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") {
            continue;
        }
        const auto &name = opt->get_lnames()[0];
        if (opt->get_expected_min() == 0) {
            config[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            config[name] = opt->as<std::string>();
        } else {
            config[name] = opt->get_default_str();
        }
    }
    return config;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    auto table = commands();
    std::vector<std::string> args(argv + 1, argv + argc);
    // "gss solve" and friends: a group word in front of one of its commands.
    if (args.size() >= 2) {
        for (const auto &c : table) {
            if (args[0] == c.group && args[1] == c.name) {
                args.erase(args.begin());
                break;
            }
        }
    }
    CLI::App app{"Graph state sampling workbench", "gsswb"};
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", GSSWB_VERSION);
    app.require_subcommand(1);
    Options opts;
    std::map<const CLI::App *, const Command *> owner;
    for (const auto &c : table) {
        auto *sub = app.add_subcommand(c.name, std::string(c.help) + " [" + c.group + "]");
        c.flags(*sub, opts);
        owner[sub] = &c;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    const CLI::App *sub = app.get_subcommands().front();
    const Command &cmd = *owner.at(sub);
    try {
        Outcome res = cmd.body(opts);
        json report = {{"tool", "gsswb"},
                       {"version", GSSWB_VERSION},
                       {"command", cmd.name},
                       {"config", echo_config(*sub)},
                       {"seeds", res.seeds},
                       {"exit_code", res.code},
                       {"result", res.result}};
        report["seeds"]["root"] = opts.seed;
        std::string text = report.dump(2) + "\n";
        bool report_to_file = !opts.out.empty() && !res.artifact && cmd.name != std::string("scaling");
        if (res.artifact) {
            write_file(opts.out, *res.artifact);
        }
        if (report_to_file) {
            write_file(opts.out, text);
        }
        out << text;
        err << res.summary << "\n";
        return res.code;
    } catch (const StageFailure &e) {
        err << "stage failure: " << e.what() << "\n";
        return kExitStageFailure;
    } catch (const std::invalid_argument &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitStageFailure;
    }
}

}  // namespace gsswb::cli
