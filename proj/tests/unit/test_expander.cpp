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

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "gsswb/common/errors.hpp"
#include "gsswb/expander/expander.hpp"
#include "gsswb/graph/expansion.hpp"
#include "support/oracles.hpp"

using namespace gsswb;

namespace {

// Second largest eigenvalue of D^{-1/2} A D^{-1/2} by dense decomposition.
double dense_mu2(const Graph &g) {
    size_t n = g.num_vertices();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (const auto &e : g.edges()) {
        double w = 1.0 / std::sqrt(double(g.degree(e.u)) * double(g.degree(e.v)));
        m(e.u, e.v) = m(e.v, e.u) = w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    return es.eigenvalues()[Eigen::Index(n) - 2];
}

bool is_regular(const Graph &g, size_t d) {
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) != d) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(random_regular, examples_and_errors) {
    EXPECT_EQ(random_regular_graph(4, 3, 1), complete_graph(4));
    auto g = random_regular_graph(10, 3, 7);
    EXPECT_TRUE(is_regular(g, 3));
    EXPECT_EQ(g.num_edges(), 15u);
    EXPECT_THROW(random_regular_graph(5, 3, 1), std::invalid_argument);
    EXPECT_THROW(random_regular_graph(10, 2, 1), std::invalid_argument);
    EXPECT_THROW(random_regular_graph(3, 3, 1), std::invalid_argument);
}

TEST(random_regular, deterministic_and_regular_at_scale) {
    EXPECT_EQ(random_regular_graph(500, 8, 3), random_regular_graph(500, 8, 3));
    EXPECT_NE(random_regular_graph(500, 8, 3), random_regular_graph(500, 8, 4));
    for (size_t n : {100, 1024, 4096}) {
        auto g = random_regular_graph(n, 8, n);
        EXPECT_TRUE(is_regular(g, 8));
        EXPECT_EQ(g.num_edges(), n * 4);
    }
}

TEST(random_regular, connectivity_rate_n16_d3) {
    int connected = 0;
    for (uint64_t seed = 0; seed < 1000; seed++) {
        auto g = random_regular_graph(16, 3, seed);
        ASSERT_TRUE(is_regular(g, 3));
        connected += is_connected(g);
    }
    EXPECT_GT(connected, 950);
}

TEST(certify, exact_examples) {
    auto k4 = certify_expander(complete_graph(4));
    EXPECT_EQ(k4.method, ExpanderCertificate::Method::Exact);
    EXPECT_EQ(*k4.h_exact, Rational(1));
    EXPECT_TRUE(k4.valid);
    EXPECT_EQ(*certify_expander(cycle_graph(8)).h_exact, Rational(1, 2));
    auto j = certificate_to_json(k4);
    EXPECT_EQ(j["h_lower"], "1/1");
    EXPECT_EQ(j["degree"], 3);
    EXPECT_TRUE(j["lambda2"].is_null());
}

TEST(certify, disconnected_is_invalid) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < 30; i++) {
        if (i != 14) {
            edges.push_back({i, i + 1});
        }
    }
    auto c = certify_expander(Graph(30, edges));
    EXPECT_EQ(c.method, ExpanderCertificate::Method::Spectral);
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.h_lower, 0.0);
    EXPECT_FALSE(certify_expander(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}})).valid);
}

TEST(certify, cycles_are_not_expanders) {
    double prev = 1.0;
    for (size_t n : {40, 80, 160}) {
        auto c = certify_expander(cycle_graph(n));
        EXPECT_EQ(c.method, ExpanderCertificate::Method::Spectral);
        EXPECT_LT(c.h_lower, prev);
        prev = c.h_lower;
    }
    EXPECT_LT(prev, 0.001);
}

TEST(certify, lanczos_matches_dense_eigensolver) {
    Rng rng(5);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 10 + rng.below(80);
        auto g = oracle::random_graph(n, 0.15, rng);
        if (!is_connected(g)) {
            continue;
        }
        auto est = second_eigenvalue(g);
        double truth = dense_mu2(g);
        EXPECT_NEAR(est.ritz, truth, 1e-6) << "n=" << n;
        EXPECT_GE(est.upper + 1e-9, truth);
    }
}

TEST(certify, spectral_bound_never_exceeds_exact) {
    Rng rng(6);
    int checked = 0;
    for (int trial = 0; trial < 150; trial++) {
        size_t n = 4 + rng.below(15);
        auto g = oracle::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
        if (!is_connected(g)) {
            continue;
        }
        double spectral = spectral_h_lower(g);
        double exact = expansion_ratio_exact(g).to_double();
        EXPECT_LE(spectral, exact + 1e-12) << "n=" << n;
        checked++;
    }
    EXPECT_GT(checked, 50);
}

TEST(certify, random_8_regular_4096_has_positive_bound) {
    auto g = random_regular_graph(4096, 8, 2024);
    auto c = certify_expander(g);
    EXPECT_EQ(c.method, ExpanderCertificate::Method::Spectral);
    EXPECT_TRUE(c.valid);
    EXPECT_GT(c.h_lower, 0.05);
    // Alon-Boppana: mu2 is at least about 2 sqrt(7) / 8.
    EXPECT_GT(*c.lambda2, 0.6);
    EXPECT_LT(*c.lambda2, 0.75);
}

TEST(i_expander, examples) {
    EXPECT_TRUE(is_I_expander_exact(cycle_graph(7), 1, 1, Rational(1)));
    EXPECT_FALSE(is_I_expander_exact(cycle_graph(6), 2, 3, Rational(1)));
    EXPECT_TRUE(is_I_expander_exact(complete_graph(4), 1, 2, Rational(1)));
    EXPECT_THROW(is_I_expander_exact(cycle_graph(21), 1, 2, Rational(1)), SizeCapExceeded);
    EXPECT_THROW(is_I_expander_exact(cycle_graph(6), 0, 2, Rational(1)), std::invalid_argument);
    EXPECT_THROW(is_I_expander_exact(cycle_graph(6), 3, 2, Rational(1)), std::invalid_argument);
    EXPECT_THROW(is_I_expander_exact(cycle_graph(6), 1, 7, Rational(1)), std::invalid_argument);
}

TEST(i_expander, agrees_with_brute_force) {
    Rng rng(8);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 3 + rng.below(9);
        auto g = oracle::random_graph(n, 0.4, rng);
        size_t lo = 1 + rng.below(n);
        size_t hi = lo + rng.below(n - lo + 1);
        Rational h(static_cast<int64_t>(rng.below(4)), 2);
        bool want = !(oracle::brute_min_ratio(g, lo, hi) < h);
        EXPECT_EQ(is_I_expander_exact(g, lo, hi, h), want);
    }
}
