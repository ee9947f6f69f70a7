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

#include <map>
#include <string>
#include <vector>

#include "degseq/preorder.hpp"
#include "degseq/switches.hpp"
#include "oracles.hpp"

using namespace degseq;

namespace {

const PreorderTable& table6() {
  static const PreorderTable t = build_preorder(6);
  return t;
}

std::vector<int> row_of(const PreorderTable& t, const std::vector<int>& d) {
  for (std::size_t s = 0; s < t.sequences.size(); ++s) {
    const auto e = t.sequences[s].entries();
    if (std::vector<int>(e.begin(), e.end()) == d) {
      std::vector<int> out;
      for (char c : t.realizable[s]) out.push_back(c);
      return out;
    }
  }
  return {};
}

}  // namespace

TEST_CASE("all_sequences counts and order") {
  // Multisets of size n from n-1 values: C(2n-2, n).
  CHECK(all_sequences(2).size() == 1);
  CHECK(all_sequences(4).size() == 15);
  CHECK(all_sequences(6).size() == 210);
  const auto four = all_sequences(4);
  CHECK(to_string(four.front()) == "3,3,3,3");
  CHECK(to_string(four.back()) == "1,1,1,1");
}

TEST_CASE("preorder on 2 vertices") {
  const PreorderTable t = build_preorder(2);
  REQUIRE(t.matchings.size() == 1);
  CHECK(t.sequences.size() == 1);
  CHECK(t.is_leq(0, 0));
  CHECK(hasse_diagram(t).classes.size() == 1);
  CHECK(hasse_diagram(t).covers.empty());
  const ConjectureReport r = check_conjectures(t);
  CHECK(r.antisymmetric());
  CHECK(r.switch_converse_holds());
}

TEST_CASE("preorder on 4 vertices") {
  const PreorderTable t = build_preorder(4);
  REQUIRE(t.matchings.size() == 3);
  const int m1 = t.index_of(Matching(4, {{1, 4}, {2, 3}}));
  const int m2 = t.index_of(Matching(4, {{1, 3}, {2, 4}}));
  const int m3 = t.index_of(Matching(4, {{1, 2}, {3, 4}}));
  CHECK(t.sequences.size() == 6);

  auto expect_row = [&](const std::vector<int>& d, bool r1, bool r2, bool r3) {
    const auto row = row_of(t, d);
    REQUIRE(row.size() == 3);
    CHECK(row[static_cast<std::size_t>(m1)] == r1);
    CHECK(row[static_cast<std::size_t>(m2)] == r2);
    CHECK(row[static_cast<std::size_t>(m3)] == r3);
  };
  expect_row({1, 1, 1, 1}, true, true, true);
  expect_row({2, 2, 2, 2}, true, true, true);
  expect_row({3, 3, 3, 3}, true, true, true);
  expect_row({2, 2, 1, 1}, true, true, false);
  expect_row({3, 3, 2, 2}, true, true, false);
  expect_row({3, 2, 2, 1}, true, false, false);

  CHECK(t.is_leq(m1, m2));
  CHECK(t.is_leq(m2, m3));
  CHECK(t.is_leq(m1, m3));
  CHECK_FALSE(t.is_leq(m2, m1));
  CHECK_FALSE(t.is_leq(m3, m2));

  const HasseDiagram hd = hasse_diagram(t);
  CHECK(hd.classes.size() == 3);
  CHECK(hd.covers.size() == 2);
  const std::string dot = hasse_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1-4,2-3") != std::string::npos);

  const ConjectureReport r = check_conjectures(t);
  CHECK(r.antisymmetric());
  CHECK(r.switch_converse_holds());
  CHECK(r.comparable_pairs == 3);
  CHECK(r.incomparable_pairs == 0);

  CHECK_THROWS_AS(build_preorder(5), std::invalid_argument);
  CHECK_THROWS_AS(build_preorder(10), std::invalid_argument);
}

TEST_CASE("preorder rows agree with brute-force realizability, n = 6") {
  const PreorderTable& t = table6();
  REQUIRE(t.matchings.size() == 15);
  for (std::size_t s = 0; s < t.sequences.size(); ++s) {
    const auto e = t.sequences[s].entries();
    const std::vector<int> d(e.begin(), e.end());
    for (std::size_t m = 0; m < t.matchings.size(); ++m)
      CHECK((t.realizable[s][m] != 0) == oracle::realizes_with(d, t.matchings[m].edges()));
  }
}

TEST_CASE("preorder on 6 vertices is reflexive and transitive with extremes") {
  const PreorderTable& t = table6();
  const int size = static_cast<int>(t.matchings.size());
  for (int a = 0; a < size; ++a) {
    CHECK(t.is_leq(a, a));
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (t.is_leq(a, b) && t.is_leq(b, c)) CHECK(t.is_leq(a, c));
  }
  const int minus = t.index_of(canonical_matching(6, Canonical::kMinus));
  const int plus = t.index_of(canonical_matching(6, Canonical::kPlus));
  for (int m = 0; m < size; ++m) {
    CHECK(t.is_leq(minus, m));
    CHECK(t.is_leq(m, plus));
  }

  const int a = t.index_of(Matching(6, {{1, 6}, {2, 4}, {3, 5}}));
  const int b = t.index_of(Matching(6, {{1, 5}, {2, 6}, {3, 4}}));
  CHECK_FALSE(t.is_leq(a, b));
  CHECK_FALSE(t.is_leq(b, a));
  const auto w1 = row_of(t, {5, 3, 3, 3, 3, 1});
  const auto w2 = row_of(t, {5, 5, 3, 3, 2, 2});
  REQUIRE(w1.size() == 15);
  REQUIRE(w2.size() == 15);
  CHECK(w1[static_cast<std::size_t>(a)] != w1[static_cast<std::size_t>(b)]);
  CHECK(w2[static_cast<std::size_t>(a)] != w2[static_cast<std::size_t>(b)]);
  CHECK(w1[static_cast<std::size_t>(a)] != w2[static_cast<std::size_t>(a)]);

  const HasseDiagram hd = hasse_diagram(t);
  std::size_t members = 0;
  for (const auto& cls : hd.classes) members += cls.size();
  CHECK(members == 15);
}

TEST_CASE("a switch never shrinks the realizable column, n = 6") {
  const PreorderTable& t = table6();
  for (std::size_t m = 0; m < t.matchings.size(); ++m) {
    for (const auto& [next, move] : switches_of(t.matchings[m])) {
      const int nx = t.index_of(next);
      CHECK(t.is_leq(nx, static_cast<int>(m)));
    }
  }
}

TEST_CASE("preorder does not depend on the thread count") {
  const PreorderTable one = build_preorder(6, 1);
  const PreorderTable three = build_preorder(6, 3);
  CHECK(one.realizable == three.realizable);
  CHECK(one.leq == three.leq);
  CHECK(hasse_dot(one) == hasse_dot(three));
}

TEST_CASE("conjecture report on 6 vertices") {
  const ConjectureReport r = check_conjectures(table6());
  CHECK(r.comparable_pairs + r.incomparable_pairs == 15 * 14 / 2);
  CHECK(r.incomparable_pairs >= 1);
}
