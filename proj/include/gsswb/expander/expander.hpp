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

#include "gsswb/common/rational.hpp"
#include "gsswb/graph/graph.hpp"
#include "json.hpp"

namespace gsswb {

/// Uniform-ish simple d-regular graph by sequential random pairing of the
/// n*d half-edge points (Steger-Wormald): two free points are drawn, the pair
/// is kept unless it forms a loop or a repeated edge, and a pass that stalls
/// is abandoned. Passes reseed via derive_seed(seed, "rrg", attempt), up to
/// kMaxAttempts passes.
///
/// Throws std::invalid_argument unless n*d is even, d >= 3 and n > d, and
/// StageFailure if every pass stalls.
Graph random_regular_graph(size_t n, size_t d, uint64_t seed);
inline constexpr int kRandomRegularMaxAttempts = 100;

struct SpectralOptions {
    double tolerance = 1e-8;
    size_t max_iterations = 200;
    uint64_t seed = 0x5eed;
};

/// Second largest eigenvalue of D^{-1/2} A D^{-1/2} by Lanczos with full
/// reorthogonalization, deflated against the top eigenvector sqrt(deg).
struct SpectralEstimate {
    double ritz = 0;       // largest Ritz value on the deflated space
    double residual = 0;   // norm of the Ritz residual
    double upper = 0;      // ritz + residual
    size_t iterations = 0;
    bool converged = false;
};
/// Requires a graph without isolated vertices.
SpectralEstimate second_eigenvalue(const Graph &g, const SpectralOptions &options = {});

struct ExpanderCertificate {
    enum class Method { Exact, Spectral };
    Method method = Method::Exact;
    bool valid = false;          // connected and h_lower > 0
    std::optional<Rational> h_exact;
    double h_lower = 0;
    uint32_t degree = 0;         // max degree
    uint32_t min_degree = 0;
    std::optional<double> lambda2;
    std::optional<SpectralEstimate> spectral;
};

/// Exact expansion ratio for n <= kExactVertexCap, otherwise the bound
/// h >= (1 - mu2) d_min^2 / (2 d_max^2) with mu2 the second eigenvalue of
/// the normalized adjacency (estimated from above). A disconnected graph
/// yields h_lower = 0 and valid = false without an eigensolve.
ExpanderCertificate certify_expander(const Graph &g, const SpectralOptions &options = {});

/// Spectral lower bound on min |N(U)|/|U| over |U| <= n/2; 0 if disconnected.
double spectral_h_lower(const Graph &g, const SpectralOptions &options = {},
                        std::optional<SpectralEstimate> *estimate = nullptr);

/// |N(U)| >= h |U| for every U with lo <= |U| <= hi. Requires
/// 1 <= lo <= hi <= n <= kExactVertexCap.
bool is_I_expander_exact(const Graph &g, size_t lo, size_t hi, const Rational &h);

std::string method_name(ExpanderCertificate::Method m);
/// {"method", "h_lower": "p/q" (exact) or number, "degree", "lambda2": number|null, ...}
nlohmann::json certificate_to_json(const ExpanderCertificate &c);

}  // namespace gsswb
