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
#include <vector>

#include "gsswb/corruption/corruption.hpp"
#include "gsswb/expander/expander.hpp"
#include "json.hpp"

namespace gsswb {

struct TrialConfig {
    uint64_t seed = 0;
    size_t n = 1024;
    size_t degree = 8;
    double epsilon = 0.01;
    CorruptionStrategy strategy = CorruptionStrategy::Random;
};

struct TrialReport {
    TrialConfig config;
    size_t removed = 0;
    size_t giant_size = 0;
    bool giant_ok = false;
    size_t t_grid = 0;
    bool minor_valid = false;
    double h_lower = 0;                 // spectral bound on the giant component
    std::optional<double> runtime_ms;   // only when timing was requested
};

/// Eigensolver settings for trial reports; looser than the certify default
/// to keep large sweeps affordable. The bound stays ritz + residual.
inline constexpr SpectralOptions kTrialSpectral{1e-3, 100, 0x5eed};

/// Random d-regular graph from derive_seed(seed, "graph"), corruption with
/// derive_seed(seed, "corruption"), giant component, spectral bound and a
/// validated grid minor from derive_seed(seed, "minor").
TrialReport run_trial(const TrialConfig &config, bool timing = false);

/// Independent trials on a worker pool; output order follows the input.
std::vector<TrialReport> run_trials(const std::vector<TrialConfig> &configs, unsigned threads, bool timing = false);

/// Every (seed, strategy, n) combination with seeds derive_seed(root, "trial", i).
std::vector<TrialConfig> sweep_configs(uint64_t root, const std::vector<size_t> &sizes,
                                       const std::vector<CorruptionStrategy> &strategies, size_t seeds,
                                       size_t degree, double epsilon);

struct ScalingRow {
    std::string strategy;
    size_t n = 0;
    size_t trials = 0;
    double giant_rate = 0;
    double t_median = 0;
    size_t t_min = 0;
    size_t t_max = 0;
};

/// One row per (strategy, n), sorted by strategy then n.
std::vector<ScalingRow> aggregate(const std::vector<TrialReport> &reports);

/// Least-squares slope of log(t_median) against log(n) over rows of one
/// strategy; nullopt with fewer than two distinct n.
std::optional<double> loglog_slope(const std::vector<ScalingRow> &rows, const std::string &strategy);

/// Header plus one line per row.
std::string scaling_csv(const std::vector<ScalingRow> &rows);

nlohmann::json trial_to_json(const TrialReport &r);

}  // namespace gsswb
