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

#include "degseq/core.hpp"

#include <algorithm>
#include <numeric>

namespace degseq {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

bool is_weakly_decreasing(std::span<const int> d) {
  return std::is_sorted(d.begin(), d.end(), std::greater<>());
}

DegreeSequence::DegreeSequence(std::vector<int> entries) : d_(std::move(entries)) {
  if (d_.empty()) throw std::invalid_argument("degree sequence must be non-empty");
  if (!is_weakly_decreasing(d_))
    throw std::invalid_argument("degree sequence must be weakly decreasing");
  const int n = this->n();
  for (int x : d_) {
    if (x < 1 || x > n - 1)
      throw std::invalid_argument("degree " + std::to_string(x) +
                                  " outside [1, n-1] for n=" + std::to_string(n));
  }
}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(d_.begin(), d_.end(), std::int64_t{0});
}

std::string to_string(const DegreeSequence& seq) {
  std::string out;
  for (int x : seq.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

// --- LabeledGraph ------------------------------------------------------------

LabeledGraph::LabeledGraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  deg_.assign(static_cast<std::size_t>(n), 0);
}

void LabeledGraph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1, " +
                                std::to_string(n_) + "]");
}

bool LabeledGraph::has_edge(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return adj_[index(a, b)] != 0;
}

void LabeledGraph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  if (adj_[index(a, b)])
    throw std::invalid_argument("duplicate edge " + to_string(Edge::of(a, b)));
  adj_[index(a, b)] = adj_[index(b, a)] = 1;
  ++deg_[static_cast<std::size_t>(a - 1)];
  ++deg_[static_cast<std::size_t>(b - 1)];
  ++m_;
}

void LabeledGraph::remove_edge(int a, int b) {
  if (!has_edge(a, b))
    throw std::invalid_argument("missing edge " + to_string(Edge::of(a, b)));
  adj_[index(a, b)] = adj_[index(b, a)] = 0;
  --deg_[static_cast<std::size_t>(a - 1)];
  --deg_[static_cast<std::size_t>(b - 1)];
  --m_;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (adj_[index(a, b)]) out.push_back({a, b});
  return out;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int b = 1; b <= n_; ++b)
    if (adj_[index(v, b)]) out.push_back(b);
  return out;
}

// --- Matching ----------------------------------------------------------------

Matching::Matching(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (Edge& e : edges_) {
    e = Edge::of(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop in matching");
    if (e.u < 1 || e.v > n) throw std::invalid_argument("matching vertex out of range");
    for (int x : {e.u, e.v}) {
      if (used[static_cast<std::size_t>(x)])
        throw std::invalid_argument("vertex " + std::to_string(x) +
                                    " covered twice by matching");
      used[static_cast<std::size_t>(x)] = 1;
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(e.u, e.v));
}

int Matching::partner(int v) const {
  for (const Edge& e : edges_) {
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
  }
  return 0;
}

std::string to_string(const Matching& m) {
  std::string out;
  for (const Edge& e : m.edges()) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

// --- SpanningFactor ----------------------------------------------------------

SpanningFactor::SpanningFactor(int h, LabeledGraph graph) : h_(h), graph_(std::move(graph)) {
  for (int v = 1; v <= graph_.n(); ++v) {
    if (graph_.degree(v) != h)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(graph_.degree(v)) + " in a " +
                                  std::to_string(h) + "-factor");
  }
}

// --- SwitchMove --------------------------------------------------------------

std::pair<Edge, Edge> SwitchMove::removed() const {
  switch (kind) {
    case SwitchKind::kType1:
    case SwitchKind::kType3:
      return {{w, x}, {y, z}};
    case SwitchKind::kType2:
      return {{w, y}, {x, z}};
  }
  throw InvariantViolation("bad switch kind");
}

std::pair<Edge, Edge> SwitchMove::added() const {
  switch (kind) {
    case SwitchKind::kType1:
      return {{w, y}, {x, z}};
    case SwitchKind::kType2:
    case SwitchKind::kType3:
      return {{w, z}, {x, y}};
  }
  throw InvariantViolation("bad switch kind");
}

std::string to_string(const SwitchMove& move) {
  auto [r1, r2] = move.removed();
  auto [a1, a2] = move.added();
  return "type " + std::to_string(static_cast<int>(move.kind)) + ": " + to_string(r1) +
         "," + to_string(r2) + " -> " + to_string(a1) + "," + to_string(a2);
}

// --- operations --------------------------------------------------------------

LabeledGraph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  LabeledGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

LabeledGraph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  LabeledGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Matching canonical_matching(int n, Canonical which) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("canonical matching needs even n >= 2, got " +
                                std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i <= n / 2; ++i) {
    if (which == Canonical::kPlus)
      edges.push_back({2 * i - 1, 2 * i});
    else
      edges.push_back({i, n + 1 - i});
  }
  return Matching(n, std::move(edges));
}

std::vector<std::vector<int>> canonical_blocks(int n, int h) {
  if (h < 1 || n < 1 || n % (h + 1) != 0)
    throw std::invalid_argument("canonical " + std::to_string(h) +
                                "-factor needs (h+1) | n, got n=" + std::to_string(n));
  std::vector<std::vector<int>> blocks;
  for (int start = 1; start <= n; start += h + 1) {
    std::vector<int> block(static_cast<std::size_t>(h + 1));
    std::iota(block.begin(), block.end(), start);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

SpanningFactor canonical_h_factor(int n, int h) {
  LabeledGraph g(n);
  for (const auto& block : canonical_blocks(n, h))
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) g.add_edge(block[i], block[j]);
  return SpanningFactor(h, std::move(g));
}

boost::multiprecision::cpp_int phi(const Matching& m) {
  boost::multiprecision::cpp_int total = 0;
  for (const Edge& e : m.edges()) {
    boost::multiprecision::cpp_int term = 1;
    term <<= (e.u + e.v);
    total += term;
  }
  return total;
}

namespace {

void extend_matchings(int n, std::vector<char>& used, std::vector<Edge>& current,
                      std::vector<Matching>& out) {
  int first = 1;
  while (first <= n && used[static_cast<std::size_t>(first)]) ++first;
  if (first > n) {
    out.emplace_back(n, current);
    return;
  }
  used[static_cast<std::size_t>(first)] = 1;
  for (int other = first + 1; other <= n; ++other) {
    if (used[static_cast<std::size_t>(other)]) continue;
    used[static_cast<std::size_t>(other)] = 1;
    current.push_back({first, other});
    extend_matchings(n, used, current, out);
    current.pop_back();
    used[static_cast<std::size_t>(other)] = 0;
  }
  used[static_cast<std::size_t>(first)] = 0;
}

}  // namespace

std::vector<Matching> all_perfect_matchings(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("perfect matchings need even n >= 2");
  std::vector<Matching> out;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Edge> current;
  extend_matchings(n, used, current, out);
  return out;
}

LabeledGraph complete_minus(int n, std::span<const Edge> removed) {
  LabeledGraph g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) g.add_edge(a, b);
  for (const Edge& e : removed) g.remove_edge(e.u, e.v);
  return g;
}

LabeledGraph complement(const LabeledGraph& g) {
  LabeledGraph out(g.n());
  for (int a = 1; a <= g.n(); ++a)
    for (int b = a + 1; b <= g.n(); ++b)
      if (!g.has_edge(a, b)) out.add_edge(a, b);
  return out;
}

bool contains_all(const LabeledGraph& g, std::span<const Edge> edges) {
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

bool has_degrees(const LabeledGraph& g, std::span<const int> d) {
  if (static_cast<int>(d.size()) != g.n()) return false;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) != d[static_cast<std::size_t>(v - 1)]) return false;
  return true;
}

}  // namespace degseq
