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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "degseq/hfactor.hpp"
#include "degseq/mplus.hpp"
#include "oracles.hpp"

using namespace degseq;

namespace {

// Every edge of k_m appears in exactly one class and each class is a
// matching missing the stated vertex.
void check_near_factorization(int m) {
  const auto classes = near_one_factorization(m);
  REQUIRE(classes.size() == static_cast<std::size_t>(m));
  std::multiset<Edge> all;
  for (int r = 1; r <= m; ++r) {
    const auto& cls = classes[static_cast<std::size_t>(r - 1)];
    CHECK(cls.size() == static_cast<std::size_t>((m - 1) / 2));
    const Matching match(m, cls);
    CHECK(match.partner(r) == 0);
    all.insert(cls.begin(), cls.end());
  }
  const auto pairs = oracle::all_pairs(m);
  CHECK(all.size() == pairs.size());
  CHECK(std::set<Edge>(all.begin(), all.end()) == std::set<Edge>(pairs.begin(), pairs.end()));
}

void check_decomposition(const LabeledGraph& g, const std::vector<std::vector<Edge>>& parts,
                         std::span<const int> support) {
  std::set<Edge> used;
  for (const auto& part : parts) {
    const Matching m(g.n(), part);
    CHECK(2 * m.size() == support.size());
    for (const Edge& e : part) {
      CHECK(g.has_edge(e.u, e.v));
      CHECK(used.insert(e).second);
    }
  }
  std::size_t inside = 0;
  for (const Edge& e : g.edges())
    if (std::count(support.begin(), support.end(), e.u) && std::count(support.begin(), support.end(), e.v))
      ++inside;
  CHECK(used.size() == inside);
}

LabeledGraph two_k3() {
  LabeledGraph g(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}})
    g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("doublestar_check examples") {
  const CheckReport eq = doublestar_check(DegreeSequence({2, 2, 2, 2, 2, 2}), 2);
  CHECK(eq.verdict);
  CHECK(eq.h == 2);
  for (int k = 1; k <= 3; ++k) CHECK(eq.row(k).slack() == 0);

  const CheckReport bad = doublestar_check(DegreeSequence({5, 5, 2, 2, 2, 2}), 2);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.row(2).lhs == 10);
  CHECK(bad.row(2).rhs == 4);
  REQUIRE(bad.first_fail_k.has_value());
  CHECK(*bad.first_fail_k == 1);
  const auto fails = bad.failing_ks();
  CHECK(std::find(fails.begin(), fails.end(), 2) != fails.end());

  CHECK_FALSE(doublestar_check(DegreeSequence({2, 2, 2, 2}), 2).structural_ok);
  CHECK_THROWS_AS(doublestar_check(DegreeSequence({1, 1}), 0), std::invalid_argument);
}

TEST_CASE("doublestar with h = 1 matches the star check row for row") {
  for (int n = 2; n <= 8; n += 2)
    for (const auto& d : oracle::decreasing_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      const CheckReport a = doublestar_check(seq, 1);
      const CheckReport b = star_check(seq);
      CHECK(a.rows == b.rows);
      CHECK(a.verdict == b.verdict);
      CHECK(a.first_fail_k == b.first_fail_k);
    }
}

TEST_CASE("hfactor_oracle agrees with brute force and never beats the check") {
  for (int h = 1; h <= 3; ++h) {
    for (int n = h + 1; n <= 8; n += h + 1) {
      const auto factor = canonical_h_factor(n, h).edges();
      for (const auto& d : oracle::decreasing_sequences(n, 1, n - 1)) {
        const DegreeSequence seq(d);
        const auto g = hfactor_oracle(seq, h);
        CHECK(g.has_value() == oracle::realizes_with(d, factor));
        if (g) {
          CHECK(has_degrees(*g, d));
          CHECK(contains_all(*g, factor));
          CHECK(doublestar_check(seq, h).verdict);
        }
      }
    }
  }
  CHECK(hfactor_oracle(DegreeSequence({2, 2, 2, 2, 2, 2}), 2)->edges() ==
        canonical_h_factor(6, 2).edges());
  CHECK(hfactor_oracle(DegreeSequence({3, 3, 3, 3}), 3)->edge_count() == 6);
  CHECK_FALSE(hfactor_oracle(DegreeSequence({5, 5, 2, 2, 2, 2}), 2).has_value());
  CHECK_THROWS_AS(hfactor_oracle(DegreeSequence({2, 2, 2, 2}), 2), std::invalid_argument);
}

TEST_CASE("near one-factorizations partition the clique") {
  const auto three = near_one_factorization(3);
  CHECK(three[0] == std::vector<Edge>{{2, 3}});
  CHECK(three[1] == std::vector<Edge>{{1, 3}});
  CHECK(three[2] == std::vector<Edge>{{1, 2}});
  for (int m = 3; m <= 11; m += 2) check_near_factorization(m);
  CHECK_THROWS_AS(near_one_factorization(4), std::invalid_argument);
  CHECK_THROWS_AS(near_one_factorization(1), std::invalid_argument);
}

TEST_CASE("one_factorization of even cliques") {
  for (int size = 2; size <= 10; size += 2) {
    std::vector<int> vs;
    for (int i = 0; i < size; ++i) vs.push_back(3 * i + 2);
    const auto parts = one_factorization(vs);
    CHECK(parts.size() == static_cast<std::size_t>(size - 1));
    LabeledGraph k(3 * size);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) k.add_edge(vs[i], vs[j]);
    check_decomposition(k, parts, vs);
  }
  CHECK_THROWS_AS(one_factorization(std::vector<int>{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("star product of two triangles is a 6-cycle") {
  const std::vector<int> a{1, 2, 3}, b{4, 5, 6};
  const PairList m1{{1, 2}}, m2{{4, 5}};
  const LabeledGraph g = star_product(6, a, b, m1, m2);
  CHECK(g.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 5}, {4, 6}, {5, 6}});
  CHECK(factor_components(g).size() == 1);
  const auto parts = star_product_factorization(a, b, m1, m2);
  CHECK(parts.size() == 2);
  std::vector<int> all{1, 2, 3, 4, 5, 6};
  check_decomposition(g, parts, all);
  CHECK_THROWS_AS(star_product(6, a, std::vector<int>{3, 4, 5}, m1, m2), std::invalid_argument);
  CHECK_THROWS_AS(star_product(6, a, b, PairList{{1, 4}}, m2), std::invalid_argument);
}

TEST_CASE("star products are 2k-regular and factor into 2k perfect matchings") {
  for (int k = 1; k <= 5; ++k) {
    const int side = 2 * k + 1;
    std::vector<int> a, b;
    for (int i = 1; i <= side; ++i) {
      a.push_back(i);
      b.push_back(side + i);
    }
    PairList m1, m2;
    const auto classes = near_one_factorization(side);
    for (const Edge& e : classes[0]) {
      m1.emplace_back(e.u, e.v);
      m2.emplace_back(e.u + side, e.v + side);
    }
    const LabeledGraph g = star_product(2 * side, a, b, m1, m2);
    for (int v = 1; v <= 2 * side; ++v) CHECK(g.degree(v) == 2 * k);
    const auto parts = star_product_factorization(a, b, m1, m2);
    CHECK(parts.size() == static_cast<std::size_t>(2 * k));
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    check_decomposition(g, parts, all);
  }
}

TEST_CASE("merge_cliques on two triangles") {
  const std::vector<int> a{1, 2, 3}, b{4, 5, 6};
  const MergeResult r = merge_cliques(two_k3(), a, b);
  CHECK(r.switches == 1);
  CHECK(r.graph.degrees() == std::vector<int>(6, 2));
  CHECK(factor_components(r.graph).size() == 1);
  CHECK(contains_all(r.graph, star_product(6, a, b, r.pairs_a, r.pairs_b).edges()));

  LabeledGraph dense = two_k3();
  for (int u = 1; u <= 3; ++u)
    for (int v = 4; v <= 6; ++v) dense.add_edge(u, v);
  const MergeResult d = merge_cliques(dense, a, b);
  CHECK(d.switches == 0);
  CHECK(d.graph == dense);

  LabeledGraph broken = two_k3();
  broken.remove_edge(1, 2);
  CHECK_THROWS_AS(merge_cliques(broken, a, b), std::invalid_argument);
}

TEST_CASE("merge_cliques randomized audit") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const int side = 2 * k + 1;
    const int n = 2 * side + static_cast<int>(rng() % 5);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::vector<int> a(perm.begin(), perm.begin() + side);
    const std::vector<int> b(perm.begin() + side, perm.begin() + 2 * side);
    LabeledGraph g = oracle::random_graph(n, 0.3, rng);
    for (const auto* side_set : {&a, &b})
      for (std::size_t i = 0; i < side_set->size(); ++i)
        for (std::size_t j = i + 1; j < side_set->size(); ++j)
          if (!g.has_edge((*side_set)[i], (*side_set)[j])) g.add_edge((*side_set)[i], (*side_set)[j]);
    const MergeResult r = merge_cliques(g, a, b);
    CHECK(r.graph.degrees() == g.degrees());
    std::set<int> inside(a.begin(), a.end());
    inside.insert(b.begin(), b.end());
    for (const Edge& e : oracle::all_pairs(n)) {
      if (inside.count(e.u) && inside.count(e.v)) continue;
      CHECK(r.graph.has_edge(e.u, e.v) == g.has_edge(e.u, e.v));
    }
    CHECK(contains_all(r.graph, star_product(n, a, b, r.pairs_a, r.pairs_b).edges()));
  }
}

TEST_CASE("disjoint perfect matchings examples") {
  const auto six = disjoint_pms(DegreeSequence({2, 2, 2, 2, 2, 2}), 2);
  REQUIRE(six.has_value());
  REQUIRE(six->matchings.size() == 2);
  const std::set<std::string> texts{to_string(six->matchings[0]), to_string(six->matchings[1])};
  CHECK(texts == std::set<std::string>{"1-3,2-5,4-6", "1-4,2-3,5-6"});

  const auto k4 = disjoint_pms(DegreeSequence({3, 3, 3, 3}), 3);
  REQUIRE(k4.has_value());
  CHECK(k4->matchings.size() == 3);
  CHECK(k4->graph.edge_count() == 6);

  const auto ten = disjoint_pms(DegreeSequence(std::vector<int>(10, 4)), 4);
  REQUIRE(ten.has_value());
  CHECK(ten->matchings.size() == 4);
  std::set<Edge> used;
  for (const Matching& m : ten->matchings) {
    CHECK(m.is_perfect());
    CHECK(contains_matching(ten->graph, m));
    for (const Edge& e : m.edges()) CHECK(used.insert(e).second);
  }

  CHECK_FALSE(disjoint_pms(DegreeSequence({5, 5, 2, 2, 2, 2}), 2).has_value());
  CHECK_THROWS_AS(disjoint_pms(DegreeSequence({2, 2, 2}), 2), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_pms(DegreeSequence({2, 2, 2, 2, 2, 1}), 2), std::invalid_argument);
}

TEST_CASE("enumerate_realizations matches brute-force counts") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& d : oracle::decreasing_sequences(n, 1, n - 1)) {
      const auto all = enumerate_realizations(DegreeSequence(d));
      CHECK(all.size() == oracle::count_realizations(d));
      std::set<std::vector<Edge>> distinct;
      for (const LabeledGraph& g : all) {
        CHECK(has_degrees(g, d));
        distinct.insert(g.edges());
      }
      CHECK(distinct.size() == all.size());
    }
  CHECK(enumerate_realizations(DegreeSequence({2, 2, 2})).size() == 1);
  CHECK(enumerate_realizations(DegreeSequence({1, 1})).size() == 1);
  CHECK_THROWS_AS(enumerate_realizations(DegreeSequence({3, 3, 3, 3, 3, 3}), 2), ResourceLimit);
}

TEST_CASE("enumerate_two_factors matches subset enumeration") {
  const LabeledGraph k4 = complete_minus(4, {});
  CHECK(enumerate_two_factors(k4).size() == 3);
  const LabeledGraph c6 = cycles_graph(6, {{1, 2, 3, 4, 5, 6}});
  const auto only = enumerate_two_factors(c6);
  REQUIRE(only.size() == 1);
  CHECK(only[0].graph() == c6);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const LabeledGraph g = oracle::random_graph(n, 0.7, rng);
    std::set<std::vector<Edge>> found;
    for (const SpanningFactor& f : enumerate_two_factors(g)) {
      CHECK(f.h() == 2);
      CHECK(found.insert(f.edges()).second);
    }
    CHECK(found == oracle::two_factors(g));
  }
  CHECK_THROWS_AS(enumerate_two_factors(complete_minus(7, {}), 5), ResourceLimit);
}

TEST_CASE("the twelve-vertex sequence has one realization with one 2-factor") {
  const DegreeSequence seq({11, 11, 9, 9, 7, 7, 6, 6, 4, 4, 2, 2});
  const auto all = enumerate_realizations(seq);
  REQUIRE(all.size() == 1);
  const auto factors = enumerate_two_factors(all[0]);
  REQUIRE(factors.size() == 1);
  const auto comps = factor_components(factors[0].graph());
  CHECK(comps == std::vector<std::vector<int>>{{1, 12, 2, 11}, {3, 10, 4, 9}, {5, 8, 6, 7}});
}

TEST_CASE("two 6-cycles are realizable by three listed sequences") {
  const LabeledGraph two_c6 = cycles_graph(12, {{1, 12, 2, 10, 3, 11}, {4, 9, 5, 7, 6, 8}});
  CHECK(factor_components(two_c6) ==
        std::vector<std::vector<int>>{{1, 12, 2, 10, 3, 11}, {4, 9, 5, 7, 6, 8}});
  for (const auto& d : std::vector<std::vector<int>>{{11, 11, 10, 8, 8, 7, 6, 6, 5, 3, 3, 2},
                                                     {11, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2},
                                                     {11, 11, 10, 8, 6, 6, 6, 5, 5, 3, 3, 2}}) {
    const auto g = realize_factor(DegreeSequence(d), two_c6);
    REQUIRE(g.has_value());
    CHECK(has_degrees(*g, d));
    CHECK(contains_all(*g, two_c6.edges()));
  }
}

TEST_CASE("five-cycles: two maxima and a unique minimum") {
  const auto cycles = enumerate_two_factors(complete_minus(5, {}));
  REQUIRE(cycles.size() == 12);
  const std::vector<std::vector<int>> all_round{{4, 4, 4, 4, 4}, {4, 3, 3, 3, 3}, {3, 3, 3, 3, 2},
                                                {2, 2, 2, 2, 2}};
  const std::vector<std::vector<int>> partial{{4, 4, 4, 3, 3}, {4, 4, 3, 3, 2}, {3, 3, 2, 2, 2},
                                              {4, 3, 3, 2, 2}};
  const LabeledGraph c = cycles_graph(5, {{1, 3, 5, 4, 2}});
  const LabeledGraph c_prime = cycles_graph(5, {{1, 2, 3, 5, 4}});
  for (const auto& d : all_round)
    for (const SpanningFactor& f : cycles)
      CHECK(realize_factor(DegreeSequence(d), f.graph()).has_value());
  for (const auto& d : partial) {
    CHECK_FALSE(realize_factor(DegreeSequence(d), c).has_value());
    CHECK_FALSE(realize_factor(DegreeSequence(d), c_prime).has_value());
  }

  // Exactly one cycle is realized by all eight sequences: 1-4-3-2-5.
  // 1-3-5-2-4 is not among the minima, since 4,4,3,3,2 misses it.
  std::vector<LabeledGraph> minima;
  for (const SpanningFactor& f : cycles) {
    bool everywhere = true;
    for (const auto* list : {&all_round, &partial})
      for (const auto& d : *list) everywhere = everywhere && realize_factor(DegreeSequence(d), f.graph()).has_value();
    if (everywhere) minima.push_back(f.graph());
  }
  REQUIRE(minima.size() == 1);
  CHECK(factor_components(minima[0]) == std::vector<std::vector<int>>{{1, 5, 2, 3, 4}});
  CHECK_FALSE(realize_factor(DegreeSequence({4, 4, 3, 3, 2}), cycles_graph(5, {{1, 3, 5, 2, 4}})).has_value());
}

TEST_CASE("factor components and cycle construction") {
  const LabeledGraph g = cycles_graph(7, {{5, 2, 7}, {1, 4, 3, 6}});
  CHECK(factor_components(g) == std::vector<std::vector<int>>{{1, 6, 3, 4}, {2, 7, 5}});
  LabeledGraph path(4);
  path.add_edge(3, 1);
  path.add_edge(1, 2);
  CHECK(factor_components(path) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK_THROWS_AS(cycles_graph(4, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("conjecture scans") {
  const ConjectureScan s = conjecture_scan(6, 2);
  CHECK(s.sequences == 210);
  CHECK(s.forward_violations.empty());
  CHECK(conjecture_scan(4, 3).forward_violations.empty());
  CHECK_THROWS_AS(conjecture_scan(7, 2), std::invalid_argument);

  const SupergraphScan sg = supergraph_scan(6, 2);
  CHECK(sg.graphs == 512);
  CHECK(sg.violations.empty());
  CHECK(sg.decreasing == 14);
}
