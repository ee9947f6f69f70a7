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
#include <vector>

#include "degseq/mplus.hpp"
#include "oracles.hpp"

using namespace degseq;

namespace {

std::vector<Edge> mplus_edges(int n) { return canonical_matching(n, Canonical::kPlus).edges(); }

void audit(const DegreeSequence& seq, const LabeledGraph& g) {
  CHECK(has_degrees(g, seq.entries()));
  CHECK(contains_matching(g, canonical_matching(seq.n(), Canonical::kPlus)));
}

}  // namespace

TEST_CASE("star_check ledgers on small sequences") {
  CHECK(star_check(DegreeSequence({2, 2, 2, 2})).verdict);

  const CheckReport a = star_check(DegreeSequence({3, 2, 2, 1}));
  CHECK_FALSE(a.verdict);
  REQUIRE(a.first_fail_k.has_value());
  CHECK(*a.first_fail_k == 1);
  CHECK(a.row(1).lhs == 3);
  CHECK(a.row(1).rhs == 2);

  const CheckReport b = star_check(DegreeSequence({3, 3, 2, 2}));
  CHECK_FALSE(b.verdict);
  REQUIRE(b.first_fail_k.has_value());
  CHECK(*b.first_fail_k == 2);
  CHECK(b.row(2).lhs == 6);
  CHECK(b.row(2).rhs == 4);

  const CheckReport ones = star_check(DegreeSequence(std::vector<int>(8, 1)));
  CHECK(ones.verdict);
  CHECK(ones.rows.size() == 8);
  CHECK(ones.row(8).rhs == 56);

  const CheckReport odd_n = star_check(DegreeSequence({2, 2, 2}));
  CHECK_FALSE(odd_n.structural_ok);
  CHECK_FALSE(odd_n.verdict);
}

TEST_CASE("star_check equals the M+ realization oracle for n <= 8") {
  for (int n = 2; n <= 8; n += 2) {
    const auto plus = mplus_edges(n);
    for (const auto& d : oracle::decreasing_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      const CheckReport report = star_check(seq);
      const bool brute = oracle::realizes_with(d, plus);
      CHECK_MESSAGE(report.verdict == brute, to_string(seq));
      CHECK(star_holds(d) == report.verdict);
      if (report.verdict) CHECK(eg_check(seq).verdict);
    }
  }
}

TEST_CASE("every decreasing supergraph of M+ passes the star check") {
  for (int n = 4; n <= 6; n += 2) {
    const auto plus = mplus_edges(n);
    std::vector<Edge> free;
    for (const Edge& e : oracle::all_pairs(n))
      if (std::find(plus.begin(), plus.end(), e) == plus.end()) free.push_back(e);
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
      LabeledGraph g(n);
      for (const Edge& e : plus) g.add_edge(e.u, e.v);
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1u) g.add_edge(free[i].u, free[i].v);
      const auto d = g.degrees();
      if (!is_weakly_decreasing(d)) continue;
      CHECK(star_check(DegreeSequence(d)).verdict);
    }
  }
}

TEST_CASE("realize_mplus known outputs") {
  CHECK(realize_mplus(DegreeSequence({1, 1, 1, 1})).edges() == std::vector<Edge>{{1, 2}, {3, 4}});
  CHECK(realize_mplus(DegreeSequence({2, 2, 2, 2})).edges() ==
        std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(realize_mplus(DegreeSequence({3, 3, 3, 3})).edge_count() == 6);
  CHECK_THROWS_AS(realize_mplus(DegreeSequence({3, 2, 2, 1})), std::invalid_argument);
}

TEST_CASE("realize_mplus handles a sequence whose default reduction fails") {
  const DegreeSequence seq({5, 4, 4, 4, 4, 3});
  MplusTrace trace;
  const LabeledGraph g = realize_mplus(seq, &trace);
  audit(seq, g);
  CHECK(trace.fallbacks >= 1);
}

TEST_CASE("realize_mplus audits over every passing sequence, n <= 10") {
  std::size_t realized = 0;
  for (int n = 2; n <= 10; n += 2) {
    for (const auto& d : oracle::decreasing_sequences(n, 1, n - 1)) {
      const DegreeSequence seq(d);
      if (!star_holds(d)) continue;
      MplusTrace trace;
      const LabeledGraph g = realize_mplus(seq, &trace);
      audit(seq, g);
      if (trace.terminal == MplusTerminal::kBase)
        CHECK(trace.reductions == (seq.sum() - n) / 2);
      ++realized;
    }
  }
  CHECK(realized > 1000);
}

TEST_CASE("realize_mplus on large random passing sequences") {
  std::mt19937_64 rng(3);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 20; ++trial) {
    const int n = 60 + 2 * static_cast<int>(rng() % 40);
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int& x : d) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    std::sort(d.rbegin(), d.rend());
    if (!star_holds(d)) continue;
    const DegreeSequence seq(d);
    audit(seq, realize_mplus(seq));
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("half-sum bound integer examples") {
  CHECK(corollary_bound_holds(DegreeSequence({2, 2, 2, 2})));
  CHECK_FALSE(corollary_bound_holds(DegreeSequence({3, 3, 3, 3})));
  CHECK_THROWS_AS(corollary_bound_holds(DegreeSequence({1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(corollary_bound_holds(DegreeSequence({2, 2, 2})), std::invalid_argument);
  CHECK_FALSE(corollary_bound_holds(DegreeSequence(tightness_instance(22).sequence)));
}

TEST_CASE("half-sum bound implies the star check, n <= 10") {
  for (int n = 4; n <= 10; n += 2) {
    for (const auto& d : oracle::decreasing_sequences(n, n / 2, n - 1)) {
      const DegreeSequence seq(d);
      if (!eg_check(seq).verdict) continue;
      if (corollary_bound_holds(seq)) CHECK(star_check(seq).verdict);
    }
  }
}

TEST_CASE("isqrt is exact") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(968) == 31);
  const std::uint64_t big = 0xFFFFFFFFFFFFFFFFull;
  CHECK(isqrt(big) == 0xFFFFFFFFull);
  for (std::uint64_t r = 1; r < 5000; r += 7) {
    CHECK(isqrt(r * r) == r);
    CHECK(isqrt(r * r - 1) == r - 1);
  }
}

TEST_CASE("tightness instances") {
  const TightnessExample t22 = tightness_instance(22);
  CHECK(t22.d_star == 19);
  CHECK(t22.k_star == 15);
  CHECK(t22.sum_parity_even);
  CHECK(t22.is_graphic);
  CHECK(t22.fails_star_at_k_star);
  CHECK_FALSE(t22.star_verdict);
  CHECK(t22.star.row(15).lhs == 285);
  CHECK(t22.star.row(15).rhs == 281);
  CHECK(t22.alpha_at_most_quarter);

  const TightnessExample t12 = tightness_instance(12);
  CHECK(t12.d_star == 9);
  CHECK(t12.k_star == 8);
  CHECK(t12.is_graphic);
  CHECK(t12.star_verdict);
  CHECK(t12.star.row(8).slack() == 4);
  CHECK_FALSE(t12.alpha_at_most_quarter);

  const TightnessExample t10 = tightness_instance(10);
  CHECK_FALSE(t10.sum_parity_even);
  CHECK_FALSE(t10.is_graphic);

  const TightnessExample t4 = tightness_instance(4);
  CHECK(t4.sequence == std::vector<int>{2, 2, 2, 2});
  CHECK(t4.star_verdict);

  CHECK_THROWS_AS(tightness_instance(7), std::invalid_argument);
  CHECK_THROWS_AS(tightness_instance(2), std::invalid_argument);
}
