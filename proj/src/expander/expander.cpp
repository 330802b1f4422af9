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

#include "gsswb/expander/expander.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "gsswb/common/errors.hpp"
#include "gsswb/common/rng.hpp"
#include "gsswb/graph/expansion.hpp"

namespace gsswb {

namespace {

std::optional<std::vector<Edge>> pairing_pass(size_t n, size_t d, Rng &rng) {
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (Vertex v = 0; v < n; v++) {
        for (size_t k = 0; k < d; k++) {
            points.push_back(v);
        }
    }
    std::unordered_set<uint64_t> used;
    used.reserve(n * d);
    std::vector<Edge> edges;
    edges.reserve(n * d / 2);
    size_t stalls = 0;
    while (!points.empty()) {
        size_t i = rng.below(points.size());
        size_t j = rng.below(points.size());
        Vertex a = points[i];
        Vertex b = points[j];
        uint64_t key = (uint64_t{std::min(a, b)} << 32) | std::max(a, b);
        if (i == j || a == b || used.count(key)) {
            // Near the end the only free points may be unusable.
            if (++stalls > 64 + 16 * points.size()) {
                return std::nullopt;
            }
            continue;
        }
        stalls = 0;
        used.insert(key);
        edges.push_back({std::min(a, b), std::max(a, b)});
        if (i < j) {
            std::swap(i, j);
        }
        // Remove the larger index first so the smaller one stays valid.
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
    }
    return edges;
}

}  // namespace

Graph random_regular_graph(size_t n, size_t d, uint64_t seed) {
    if (d < 3 || n <= d || (n * d) % 2 != 0) {
        throw std::invalid_argument("random regular graph needs d >= 3, n > d and n*d even (n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d) + ")");
    }
    for (int attempt = 0; attempt < kRandomRegularMaxAttempts; attempt++) {
        Rng rng(derive_seed(seed, "rrg", static_cast<uint64_t>(attempt)));
        if (auto edges = pairing_pass(n, d, rng)) {
            return Graph(n, std::move(*edges));
        }
    }
    throw StageFailure("random-regular", "no simple pairing after " + std::to_string(kRandomRegularMaxAttempts) +
                                             " attempts");
}

SpectralEstimate second_eigenvalue(const Graph &g, const SpectralOptions &options) {
    size_t n = g.num_vertices();
    if (n < 2) {
        throw std::invalid_argument("spectral estimate needs at least two vertices");
    }
    Eigen::VectorXd inv_sqrt(n);
    Eigen::VectorXd top(n);
    for (Vertex v = 0; v < n; v++) {
        if (g.degree(v) == 0) {
            throw std::invalid_argument("spectral estimate needs a graph without isolated vertices");
        }
        inv_sqrt[v] = 1.0 / std::sqrt(double(g.degree(v)));
        top[v] = std::sqrt(double(g.degree(v)));
    }
    top.normalize();
    auto apply = [&](const Eigen::VectorXd &x, Eigen::VectorXd &y) {
        for (Vertex v = 0; v < n; v++) {
            double s = 0;
            for (Vertex w : g.neighbors(v)) {
                s += inv_sqrt[w] * x[w];
            }
            y[v] = inv_sqrt[v] * s;
        }
    };
    size_t m_max = std::min(options.max_iterations, n - 1);
    Eigen::MatrixXd q(n, m_max + 1);
    Rng rng(options.seed);
    Eigen::VectorXd v(n);
    for (size_t i = 0; i < n; i++) {
        v[i] = rng.unit() - 0.5;
    }
    v -= top.dot(v) * top;
    v.normalize();
    q.col(0) = v;
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::VectorXd w(n);
    SpectralEstimate est;
    for (size_t k = 0; k < m_max; k++) {
        apply(q.col(k), w);
        double a = q.col(k).dot(w);
        alpha.push_back(a);
        // Full reorthogonalization, twice, against the Lanczos basis and the
        // deflated top eigenvector.
        for (int pass = 0; pass < 2; pass++) {
            w -= top.dot(w) * top;
            w -= q.leftCols(k + 1) * (q.leftCols(k + 1).transpose() * w);
        }
        double b = w.norm();
        size_t m = alpha.size();
        bool last = k + 1 == m_max || b < 1e-14;
        if (last || m % 5 == 0) {
            Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), Eigen::Index(m));
            Eigen::VectorXd sub(m > 1 ? m - 1 : 0);
            for (size_t i = 0; i + 1 < m; i++) {
                sub[Eigen::Index(i)] = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
            tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            Eigen::Index top_idx = Eigen::Index(m) - 1;  // eigenvalues ascending
            est.ritz = tri.eigenvalues()[top_idx];
            est.residual = std::abs(b * tri.eigenvectors()(top_idx, top_idx));
            est.iterations = m;
            if (est.residual <= options.tolerance || b < 1e-14) {
                est.converged = true;
                break;
            }
        }
        if (last) {
            break;
        }
        beta.push_back(b);
        q.col(k + 1) = w / b;
    }
    est.upper = std::min(1.0, est.ritz + est.residual);
    return est;
}

double spectral_h_lower(const Graph &g, const SpectralOptions &options, std::optional<SpectralEstimate> *estimate) {
    if (g.num_vertices() < 2 || !is_connected(g)) {
        return 0.0;
    }
    auto est = second_eigenvalue(g, options);
    if (estimate != nullptr) {
        *estimate = est;
    }
    double dmin = double(g.min_degree());
    double dmax = double(g.max_degree());
    return std::max(0.0, (1.0 - est.upper) * dmin * dmin / (2.0 * dmax * dmax));
}

ExpanderCertificate certify_expander(const Graph &g, const SpectralOptions &options) {
    ExpanderCertificate c;
    c.degree = static_cast<uint32_t>(g.max_degree());
    c.min_degree = static_cast<uint32_t>(g.num_vertices() == 0 ? 0 : g.min_degree());
    bool connected = g.num_vertices() >= 2 && is_connected(g);
    if (g.num_vertices() <= kExactVertexCap) {
        c.method = ExpanderCertificate::Method::Exact;
        c.h_exact = g.num_vertices() >= 2 ? expansion_ratio_exact(g) : Rational(0);
        c.h_lower = c.h_exact->to_double();
        c.valid = connected && c.h_lower > 0;
        return c;
    }
    c.method = ExpanderCertificate::Method::Spectral;
    if (!connected) {
        c.h_lower = 0;
        c.valid = false;
        return c;
    }
    std::optional<SpectralEstimate> est;
    c.h_lower = spectral_h_lower(g, options, &est);
    c.spectral = est;
    c.lambda2 = est->upper;
    c.valid = c.h_lower > 0;
    return c;
}

bool is_I_expander_exact(const Graph &g, size_t lo, size_t hi, const Rational &h) {
    size_t n = g.num_vertices();
    if (n > kExactVertexCap) {
        throw SizeCapExceeded("I-expander check", n, kExactVertexCap);
    }
    if (lo < 1 || lo > hi || hi > n) {
        throw std::invalid_argument("I-expander interval must satisfy 1 <= lo <= hi <= n");
    }
    auto profile = expansion_profile_exact(g);
    return !(profile.min_ratio(lo, hi).first < h);
}

std::string method_name(ExpanderCertificate::Method m) {
    return m == ExpanderCertificate::Method::Exact ? "exact" : "spectral";
}

nlohmann::json certificate_to_json(const ExpanderCertificate &c) {
    nlohmann::json j;
    j["method"] = method_name(c.method);
    if (c.h_exact) {
        j["h_lower"] = c.h_exact->to_string();
    } else {
        j["h_lower"] = c.h_lower;
    }
    j["degree"] = c.degree;
    j["min_degree"] = c.min_degree;
    j["lambda2"] = c.lambda2 ? nlohmann::json(*c.lambda2) : nlohmann::json(nullptr);
    j["valid"] = c.valid;
    if (c.spectral) {
        j["lanczos"] = {{"ritz", c.spectral->ritz},
                        {"residual", c.spectral->residual},
                        {"iterations", c.spectral->iterations},
                        {"converged", c.spectral->converged}};
    }
    return j;
}

}  // namespace gsswb
