// Copyright 2026 The degseq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "degseq/blossom.hpp"
#include "degseq/graphic.hpp"
#include "oracles.hpp"

using namespace degseq;

TEST_CASE("eg_check agrees with exhaustive graph enumeration") {
  for (int n = 1; n <= 7; ++n) {
    const auto graphic = oracle::graphic_sequences(n);
    for (const auto& d : oracle::decreasing_sequences(n, 0, n - 1)) {
      const CheckReport report = eg_check(d);
      CHECK_MESSAGE(report.verdict == (graphic.count(d) > 0), "n=", n);
      CHECK(report.verdict == is_graphic(d));
      CHECK(report.first_fail_k.has_value() == !report.failing_ks().empty());
      if (report.verdict) {
        const LabeledGraph g = hh_realize(d);
        CHECK(has_degrees(g, d));
      } else {
        CHECK_THROWS_AS(hh_realize(d), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("eg_check rows on small cases") {
  const CheckReport r = eg_check(std::vector<int>{3, 3, 1, 1});
  CHECK(r.family == InequalityFamily::kErdosGallai);
  CHECK(r.parity_ok);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.first_fail_k.has_value());
  CHECK(*r.first_fail_k == 2);
  CHECK(r.row(2).lhs == 6);
  CHECK(r.row(2).rhs == 4);
  CHECK(r.row(2).slack() == -2);

  const CheckReport odd = eg_check(std::vector<int>{1, 1, 1});
  CHECK_FALSE(odd.parity_ok);
  CHECK_FALSE(odd.verdict);
  CHECK_FALSE(odd.first_fail_k.has_value());

  CHECK(eg_check(DegreeSequence({2, 2, 2})).verdict);
  CHECK_THROWS_AS(eg_check(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(eg_check(std::vector<int>{1, -1}), std::invalid_argument);
}

TEST_CASE("hh_realize handles large regular inputs") {
  std::vector<int> d(400, 7);
  const LabeledGraph g = hh_realize(d);
  CHECK(has_degrees(g, d));
  CHECK(g.edge_count() == 1400);
}

TEST_CASE("lovasz_pm_check agrees with brute force") {
  for (int n = 2; n <= 6; n += 2) {
    const auto matchings = all_perfect_matchings(n);
    for (const auto& d : oracle::decreasing_sequences(n, 1, n - 1)) {
      bool brute = false;
      for (const Matching& m : matchings) {
        if (oracle::realizes_with(d, m.edges())) {
          brute = true;
          break;
        }
      }
      CHECK_MESSAGE(lovasz_pm_check(DegreeSequence(d)) == brute, "n=", n);
    }
  }
  CHECK_FALSE(lovasz_pm_check(DegreeSequence({2, 2, 2})));
}

TEST_CASE("max_matching agrees with subset DP on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 8);
    const LabeledGraph g = oracle::random_graph(n, p, rng);
    const Matching m = max_matching(g);
    CHECK(static_cast<int>(m.size()) == oracle::max_matching_size(g));
    for (const Edge& e : m.edges()) CHECK(g.has_edge(e.u, e.v));
  }
}

TEST_CASE("blossom handles an odd cycle with a pendant") {
  // 5-cycle 0..4 plus vertex 5 hanging off 0: perfect matching of size 3.
  std::vector<std::vector<int>> adj(6);
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int i = 0; i < 5; ++i) link(i, (i + 1) % 5);
  link(0, 5);
  const auto mate = maximum_matching(adj);
  for (int v = 0; v < 6; ++v) {
    REQUIRE(mate[static_cast<std::size_t>(v)] >= 0);
    CHECK(mate[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])] == v);
  }
}

TEST_CASE("f_factor agrees with exhaustive subgraph search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const LabeledGraph host = oracle::random_graph(n, 0.6, rng);
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      const int cap = host.degree(v);
      f[static_cast<std::size_t>(v - 1)] = cap == 0 ? 0 : static_cast<int>(rng() % static_cast<unsigned>(cap + 1));
    }
    const auto found = f_factor(host, f);
    const bool brute = oracle::has_degree_subgraph(n, host.edges(), f);
    CHECK(found.has_value() == brute);
    if (found) {
      CHECK(has_degrees(*found, f));
      for (const Edge& e : found->edges()) CHECK(host.has_edge(e.u, e.v));
    }
  }
  LabeledGraph host(3);
  host.add_edge(1, 2);
  CHECK_THROWS_AS(f_factor(host, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(f_factor(host, std::vector<int>{1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(f_factor(host, std::vector<int>{-1, 0, 0}), std::invalid_argument);
}
