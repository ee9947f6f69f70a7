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

#include "degseq/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace degseq {
namespace {

using nlohmann::json;

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  return value;
}

InequalityFamily family_from_string(const std::string& s) {
  for (auto f : {InequalityFamily::kErdosGallai, InequalityFamily::kStar, InequalityFamily::kDoubleStar})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown inequality family '" + s + "'");
}

json seq_json(std::span<const int> d) { return json(std::vector<int>(d.begin(), d.end())); }

}  // namespace

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  for (auto token : tokens(text)) out.push_back(to_int(token));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

DegreeSequence parse_sequence(std::string_view text) { return DegreeSequence(parse_ints(text)); }

Matching parse_matching(std::string_view text, int n) {
  std::vector<Edge> edges;
  int largest = 0;
  for (auto token : tokens(text)) {
    const auto dash = token.find('-');
    if (dash == std::string_view::npos)
      throw std::invalid_argument("matching edge must look like i-j: '" + std::string(token) + "'");
    const int a = to_int(token.substr(0, dash));
    const int b = to_int(token.substr(dash + 1));
    edges.push_back(Edge::of(a, b));
    largest = std::max({largest, a, b});
  }
  if (edges.empty()) throw std::invalid_argument("empty matching");
  return Matching(n == 0 ? largest : n, std::move(edges));
}

std::string format_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    rows.push_back(parse_ints(line));
  }
  if (rows.empty() || rows.front().size() != 2)
    throw std::invalid_argument("edge list needs a header line 'n m'");
  const int n = rows.front()[0];
  const auto m = static_cast<std::size_t>(rows.front()[1]);
  if (n < 0 || rows.size() - 1 != m)
    throw std::invalid_argument("edge list header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(rows.size() - 1));
  LabeledGraph g(n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw std::invalid_argument("edge line must have two vertices");
    g.add_edge(rows[i][0], rows[i][1]);
  }
  return g;
}

std::string format_edges_inline(const LabeledGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

std::string format_components(const LabeledGraph& g) {
  std::string out;
  for (const auto& comp : factor_components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(comp[i]);
    }
    out += '\n';
  }
  return out;
}

json to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}};
}

LabeledGraph graph_from_json(const json& j) {
  try {
    LabeledGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

json to_json(const Matching& m) {
  json edges = json::array();
  for (const Edge& e : m.edges()) edges.push_back({e.u, e.v});
  return {{"n", m.n()}, {"edges", edges}, {"text", to_string(m)}};
}

json to_json(const CheckReport& report) {
  json rows = json::array();
  for (const CheckRow& r : report.rows)
    rows.push_back({{"k", r.k}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack()}});
  return {{"family", to_string(report.family)},
          {"h", report.h},
          {"sequence", report.sequence},
          {"rows", rows},
          {"parity_ok", report.parity_ok},
          {"structural_ok", report.structural_ok},
          {"verdict", report.verdict},
          {"first_fail_k", report.first_fail_k ? json(*report.first_fail_k) : json(nullptr)},
          {"failing_ks", report.failing_ks()}};
}

CheckReport check_report_from_json(const json& j) try {
  CheckReport report;
  report.family = family_from_string(j.at("family").get<std::string>());
  report.h = j.at("h").get<int>();
  report.sequence = j.at("sequence").get<std::vector<int>>();
  for (const auto& r : j.at("rows"))
    report.rows.push_back({r.at("k").get<int>(), r.at("lhs").get<std::int64_t>(), r.at("rhs").get<std::int64_t>()});
  report.parity_ok = j.at("parity_ok").get<bool>();
  report.structural_ok = j.at("structural_ok").get<bool>();
  report.verdict = j.at("verdict").get<bool>();
  if (!j.at("first_fail_k").is_null()) report.first_fail_k = j.at("first_fail_k").get<int>();
  return report;
} catch (const json::exception& e) {
  throw std::invalid_argument(std::string("malformed check report JSON: ") + e.what());
}

json to_json(const PreorderTable& table) {
  json matchings = json::array(), sequences = json::array();
  for (const Matching& m : table.matchings) matchings.push_back(to_string(m));
  for (const DegreeSequence& s : table.sequences) sequences.push_back(seq_json(s.entries()));
  auto bits = [](const std::vector<std::vector<char>>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
      std::string line;
      for (char c : row) line += c ? '1' : '0';
      out.push_back(line);
    }
    return out;
  };
  return {{"n", table.n},
          {"matchings", matchings},
          {"sequences", sequences},
          {"realizable", bits(table.realizable)},
          {"leq", bits(table.leq)}};
}

json to_json(const ConjectureReport& report, const PreorderTable& table) {
  auto pairs = [&](const std::vector<std::pair<int, int>>& list) {
    json out = json::array();
    for (auto [a, b] : list)
      out.push_back({to_string(table.matchings[static_cast<std::size_t>(a)]),
                     to_string(table.matchings[static_cast<std::size_t>(b)])});
    return out;
  };
  return {{"n", table.n},
          {"comparable_pairs", report.comparable_pairs},
          {"incomparable_pairs", report.incomparable_pairs},
          {"antisymmetry_violations", pairs(report.antisymmetry_violations)},
          {"switch_path_violations", pairs(report.switch_path_violations)}};
}

json to_json(const ConjectureScan& scan) {
  auto entries = [](const std::vector<ScanEntry>& list) {
    json out = json::array();
    for (const ScanEntry& e : list)
      out.push_back({{"sequence", e.sequence}, {"doublestar", e.doublestar}, {"oracle", e.oracle}});
    return out;
  };
  return {{"n", scan.n},
          {"h", scan.h},
          {"sequences", scan.sequences},
          {"forward_violations", entries(scan.forward_violations)},
          {"reverse_mismatches", entries(scan.reverse_mismatches)}};
}

json packing_json(const DegreeSequence& pi1, const DegreeSequence& pi2,
                  const std::optional<Packing>& result) {
  json j = {{"pi1", seq_json(pi1.entries())},
            {"pi2", seq_json(pi2.entries())},
            {"hypothesis", packing_hypothesis(pi1, pi2)},
            {"success", result.has_value()}};
  if (result) {
    j["edges1"] = to_json(result->first)["edges"];
    j["edges2"] = to_json(result->second)["edges"];
  } else {
    j["edges1"] = json::array();
    j["edges2"] = json::array();
  }
  return j;
}

}  // namespace degseq
