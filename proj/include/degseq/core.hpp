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

#ifndef DEGSEQ_CORE_HPP_
#define DEGSEQ_CORE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Vertices are 1-based everywhere: a graph on n vertices has vertex set
// {1, ..., n}. Internal scratch arrays may be 0-based but never leak out.
namespace degseq {

// Raised when a routine reaches a state its correctness argument rules out.
// Seeing one of these means a transcription bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by exhaustive routines that hit their configured work limit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;

  // Normalizes so that u < v.
  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  bool touches(int x) const { return u == x || v == x; }
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// A weakly decreasing sequence d_1 >= ... >= d_n with 1 <= d_i <= n-1.
class DegreeSequence {
 public:
  // Throws std::invalid_argument if any invariant fails.
  explicit DegreeSequence(std::vector<int> entries);

  int n() const { return static_cast<int>(d_.size()); }
  // 1-based access.
  int operator[](int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return d_; }
  std::int64_t sum() const;
  int max() const { return d_.front(); }
  int min() const { return d_.back(); }

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<int> d_;
};

std::string to_string(const DegreeSequence& seq);

// True if the entries are weakly decreasing.
bool is_weakly_decreasing(std::span<const int> d);

// Simple undirected graph on {1..n} backed by a dense adjacency matrix.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);

  int n() const { return n_; }
  bool has_edge(int a, int b) const;
  int degree(int v) const { return deg_[static_cast<std::size_t>(v - 1)]; }
  std::vector<int> degrees() const { return deg_; }
  std::size_t edge_count() const { return m_; }

  // Adds {a,b}; throws std::invalid_argument on a loop, an out-of-range
  // endpoint or an edge that is already present.
  void add_edge(int a, int b);
  // Removes {a,b}; throws std::invalid_argument if it is absent.
  void remove_edge(int a, int b);

  // Edges as sorted pairs (u < v), in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int v) const;

  bool operator==(const LabeledGraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b - 1);
  }
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> deg_;
};

// Pairwise vertex-disjoint edges on {1..n}, kept sorted.
class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument on overlapping endpoints, loops or
  // out-of-range vertices.
  Matching(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool is_perfect() const { return 2 * static_cast<int>(edges_.size()) == n_; }
  bool contains(const Edge& e) const;
  // Partner of v, or 0 if v is unmatched.
  int partner(int v) const;

  auto operator<=>(const Matching&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

std::string to_string(const Matching& m);

// A spanning h-regular subgraph.
class SpanningFactor {
 public:
  // Throws std::invalid_argument if some vertex has degree != h in graph.
  SpanningFactor(int h, LabeledGraph graph);

  int n() const { return graph_.n(); }
  int h() const { return h_; }
  const LabeledGraph& graph() const { return graph_; }
  std::vector<Edge> edges() const { return graph_.edges(); }

  bool operator==(const SpanningFactor&) const = default;

 private:
  int h_;
  LabeledGraph graph_;
};

enum class SwitchKind { kType1 = 1, kType2 = 2, kType3 = 3 };

// A switch on w < x < y < z. The move always describes the downward
// exchange from the upper matching M to the lower matching N:
//   type 1: {wx, yz} -> {wy, xz}
//   type 2: {wy, xz} -> {wz, xy}
//   type 3: {wx, yz} -> {wz, xy}
struct SwitchMove {
  int w = 0;
  int x = 0;
  int y = 0;
  int z = 0;
  SwitchKind kind = SwitchKind::kType1;

  // Edges of M \ N and N \ M respectively.
  std::pair<Edge, Edge> removed() const;
  std::pair<Edge, Edge> added() const;

  bool operator==(const SwitchMove&) const = default;
};

std::string to_string(const SwitchMove& move);

enum class Canonical { kPlus, kMinus };

// --- operations -------------------------------------------------------------

// Throws std::invalid_argument on loops, out-of-range endpoints, duplicates.
LabeledGraph build_graph(int n, std::span<const std::pair<int, int>> edges);
LabeledGraph build_graph(int n, std::span<const Edge> edges);

// M+ = {(1,2),(3,4),...}; M- = {(1,n),(2,n-1),...}. Requires n even.
Matching canonical_matching(int n, Canonical which);

// Disjoint K_{h+1} blocks on consecutive labels. Requires (h+1) | n.
SpanningFactor canonical_h_factor(int n, int h);

// Vertex blocks of the canonical h-factor: {1..h+1}, {h+2..2h+2}, ...
std::vector<std::vector<int>> canonical_blocks(int n, int h);

// Sum over matching edges (u,v) of 2^(u+v), exactly.
boost::multiprecision::cpp_int phi(const Matching& m);

// All perfect matchings of K_n, each with sorted edges. The enumeration pairs
// the smallest free vertex with each larger free vertex in increasing order.
std::vector<Matching> all_perfect_matchings(int n);

// K_n with the given edges removed.
LabeledGraph complete_minus(int n, std::span<const Edge> removed);
LabeledGraph complement(const LabeledGraph& g);

bool contains_all(const LabeledGraph& g, std::span<const Edge> edges);
inline bool contains_matching(const LabeledGraph& g, const Matching& m) {
  return contains_all(g, m.edges());
}
// Labelled degree audit: deg_G(i) == d_i for every i.
bool has_degrees(const LabeledGraph& g, std::span<const int> d);

}  // namespace degseq

#endif  // DEGSEQ_CORE_HPP_
