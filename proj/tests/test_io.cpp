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

#include <string>

#include "degseq/io.hpp"
#include "degseq/mplus.hpp"

using namespace degseq;

TEST_CASE("parse_ints accepts commas and whitespace") {
  CHECK(parse_ints("3,2,2,1") == std::vector<int>{3, 2, 2, 1});
  CHECK(parse_ints(" 3 2\t2,1 ") == std::vector<int>{3, 2, 2, 1});
  CHECK_THROWS_AS(parse_ints(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ints("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ints("3,2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("1,2"), std::invalid_argument);
  CHECK(parse_sequence("2 2 2") == DegreeSequence({2, 2, 2}));
}

TEST_CASE("parse_matching") {
  const Matching m = parse_matching("3-4, 2-1");
  CHECK(m.n() == 4);
  CHECK(to_string(m) == "1-2,3-4");
  CHECK(parse_matching("1-2", 6).n() == 6);
  CHECK_FALSE(parse_matching("1-2", 6).is_perfect());
  CHECK_THROWS_AS(parse_matching("12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matching("1-2,2-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matching("1-a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matching(""), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
  const LabeledGraph g = realize_mplus(DegreeSequence({3, 3, 2, 2, 2, 2}));
  const std::string text = format_edge_list(g);
  CHECK(text.rfind("6 " + std::to_string(g.edge_count()) + "\n", 0) == 0);
  CHECK(parse_edge_list(text) == g);
  CHECK(parse_edge_list("# comment\n\n3 1\n1 3\n").edges() == std::vector<Edge>{{1, 3}});
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
  CHECK(format_edges_inline(g).find("1-2") == 0);
}

TEST_CASE("components text") {
  LabeledGraph g(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {3, 2}, {2, 1}, {4, 5}, {5, 6}, {6, 4}})
    g.add_edge(a, b);
  CHECK(format_components(g) == "1 3 2\n4 6 5\n");
}

TEST_CASE("JSON round trips") {
  const LabeledGraph g = realize_mplus(DegreeSequence({2, 2, 2, 2}));
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{1, 1}}}}), std::invalid_argument);

  for (const auto& seq : {DegreeSequence({3, 2, 2, 1}), DegreeSequence({2, 2, 2, 2})}) {
    const CheckReport r = star_check(seq);
    const nlohmann::json j = to_json(r);
    CHECK(check_report_from_json(j) == r);
    CHECK(check_report_from_json(nlohmann::json::parse(j.dump())) == r);
  }
  const nlohmann::json neg = to_json(star_check(DegreeSequence({3, 2, 2, 1})));
  CHECK(neg["first_fail_k"] == 1);
  CHECK(neg["family"] == to_string(InequalityFamily::kStar));
  CHECK(neg["rows"][0]["slack"] == -1);
  CHECK_THROWS_AS(check_report_from_json(nlohmann::json::object()), std::invalid_argument);

  const nlohmann::json m = to_json(canonical_matching(4, Canonical::kMinus));
  CHECK(m["text"] == "1-4,2-3");
}

TEST_CASE("preorder and packing JSON") {
  const PreorderTable t = build_preorder(4);
  const nlohmann::json j = to_json(t);
  CHECK(j["matchings"].size() == 3);
  CHECK(j["realizable"].size() == t.sequences.size());
  CHECK(j["leq"][0].get<std::string>().size() == 3);
  const nlohmann::json c = to_json(check_conjectures(t), t);
  CHECK(c["antisymmetry_violations"].empty());

  const DegreeSequence ones({1, 1, 1, 1});
  const nlohmann::json p = packing_json(ones, ones, pack(ones, ones));
  CHECK(p["success"] == true);
  CHECK(p["edges1"].size() == 2);
  CHECK(p["edges2"].size() == 2);
}
