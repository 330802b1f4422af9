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

#include "gsswb/corruption/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "gsswb/common/parallel.hpp"
#include "gsswb/common/rng.hpp"

namespace gsswb {

TrialReport run_trial(const TrialConfig &config, bool timing) {
    auto start = std::chrono::steady_clock::now();
    TrialReport r;
    r.config = config;
    Graph g = random_regular_graph(config.n, config.degree, derive_seed(config.seed, "graph"));
    CorruptionPlan plan{config.epsilon, config.strategy, {}};
    Subgraph survivors = corrupt(g, plan, derive_seed(config.seed, "corruption"));
    r.removed = plan.removed.size();
    auto giant = giant_component(survivors.graph, config.n);
    r.giant_size = giant.vertices.size();
    r.giant_ok = giant.ok;
    Subgraph core = induced_subgraph(survivors.graph, giant.vertices);
    if (core.graph.num_vertices() >= 2) {
        r.h_lower = spectral_h_lower(core.graph, kTrialSpectral);
    }
    auto minor = embed_grid_minor(core.graph, derive_seed(config.seed, "minor"));
    r.minor_valid = validate_minor_embedding(core.graph, minor);
    r.t_grid = minor.rows;
    if (timing) {
        r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

std::vector<TrialReport> run_trials(const std::vector<TrialConfig> &configs, unsigned threads, bool timing) {
    std::vector<TrialReport> out(configs.size());
    parallel_for(configs.size(), threads, [&](size_t i) { out[i] = run_trial(configs[i], timing); });
    return out;
}

std::vector<TrialConfig> sweep_configs(uint64_t root, const std::vector<size_t> &sizes,
                                       const std::vector<CorruptionStrategy> &strategies, size_t seeds,
                                       size_t degree, double epsilon) {
    std::vector<TrialConfig> out;
    for (size_t i = 0; i < seeds; i++) {
        uint64_t seed = derive_seed(root, "trial", i);
        for (auto s : strategies) {
            for (size_t n : sizes) {
                out.push_back({seed, n, degree, epsilon, s});
            }
        }
    }
    return out;
}

std::vector<ScalingRow> aggregate(const std::vector<TrialReport> &reports) {
    std::map<std::pair<std::string, size_t>, std::vector<const TrialReport *>> groups;
    for (const auto &r : reports) {
        groups[{std::string(strategy_name(r.config.strategy)), r.config.n}].push_back(&r);
    }
    std::vector<ScalingRow> rows;
    for (const auto &[key, group] : groups) {
        ScalingRow row;
        row.strategy = key.first;
        row.n = key.second;
        row.trials = group.size();
        std::vector<size_t> ts;
        size_t giant = 0;
        for (const auto *r : group) {
            ts.push_back(r->t_grid);
            giant += r->giant_ok;
        }
        std::sort(ts.begin(), ts.end());
        size_t m = ts.size();
        row.t_median = m % 2 == 1 ? static_cast<double>(ts[m / 2])
                                  : 0.5 * static_cast<double>(ts[m / 2 - 1] + ts[m / 2]);
        row.t_min = ts.front();
        row.t_max = ts.back();
        row.giant_rate = static_cast<double>(giant) / static_cast<double>(m);
        rows.push_back(row);
    }
    return rows;
}

std::optional<double> loglog_slope(const std::vector<ScalingRow> &rows, const std::string &strategy) {
    std::vector<std::pair<double, double>> pts;
    for (const auto &r : rows) {
        if (r.strategy == strategy && r.t_median > 0) {
            pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.t_median));
        }
    }
    if (pts.size() < 2) {
        return std::nullopt;
    }
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

std::string scaling_csv(const std::vector<ScalingRow> &rows) {
    std::string out = "strategy,n,trials,giant_ok_rate,t_median,t_min,t_max\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.4f,%.1f,%zu,%zu\n", r.strategy.c_str(), r.n, r.trials,
                      r.giant_rate, r.t_median, r.t_min, r.t_max);
        out += buf;
    }
    return out;
}

nlohmann::json trial_to_json(const TrialReport &r) {
    nlohmann::json j = {{"seed", r.config.seed},
                        {"n", r.config.n},
                        {"d", r.config.degree},
                        {"epsilon", r.config.epsilon},
                        {"strategy", strategy_name(r.config.strategy)},
                        {"removed", r.removed},
                        {"giant_size", r.giant_size},
                        {"giant_ok", r.giant_ok},
                        {"t_grid", r.t_grid},
                        {"minor_valid", r.minor_valid},
                        {"h_lower", r.h_lower},
                        {"epsilon_threshold", r.h_lower / 6.0}};
    j["runtime_ms"] = r.runtime_ms ? nlohmann::json(*r.runtime_ms) : nlohmann::json(nullptr);
    return j;
}

}  // namespace gsswb
