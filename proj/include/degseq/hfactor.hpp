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

#ifndef DEGSEQ_HFACTOR_HPP_
#define DEGSEQ_HFACTOR_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/graphic.hpp"

namespace degseq {

// Realizability test for the canonical h-factor (disjoint K_{h+1} blocks on
// consecutive labels). With s = k mod (h+1), row k reads
//   sum_{i<=k} d_i <= k(k-1) + sum_{i=k+1}^{k+1+h-s} min(d_i - h + s, k)
//                            + sum_{i>k+1+h-s} min(d_i - h, k),
// ranges clamped to n. structural_ok is (h+1) | n. Throws
// std::invalid_argument for h < 1.
CheckReport doublestar_check(const DegreeSequence& seq, int h);

// The canonical h-factor plus an f-factor of its complement with f = d - h,
// or nullopt. Throws std::invalid_argument unless (h+1) | n.
std::optional<LabeledGraph> hfactor_oracle(const DegreeSequence& seq, int h);

// Same idea for an arbitrary spanning subgraph: a realization of seq that
// contains every edge of factor, or nullopt. Throws std::invalid_argument
// when the vertex counts differ.
std::optional<LabeledGraph> realize_factor(const DegreeSequence& seq, const LabeledGraph& factor);

// Near-1-factorization of K_m on labels 1..m, m odd >= 3. Entry r-1 is the
// class {(i,j) : i+j = 2r mod m}, which misses exactly vertex r.
std::vector<std::vector<Edge>> near_one_factorization(int m);

// 1-factorization of the complete graph on an even vertex set (size >= 2):
// the highest label is a fixed hub and the rest rotate round-robin.
std::vector<std::vector<Edge>> one_factorization(std::span<const int> vertices);

// Ordered near-perfect matching of a (2k+1)-clique: pairs (a_j, b_j).
using PairList = std::vector<std::pair<int, int>>;

// (K_A - M1) u (K_B - M2) plus the cross edges a_j^1-a_j^2 and b_j^1-b_j^2,
// on vertex set {1..n}. Throws std::invalid_argument unless |A| = |B| = 2k+1,
// A and B are disjoint, and m1, m2 are near-perfect matchings of A and B.
LabeledGraph star_product(int n, std::span<const int> a, std::span<const int> b,
                          const PairList& m1, const PairList& m2);

// The 2k perfect matchings of A u B decomposing star_product(a, b, m1, m2).
std::vector<std::vector<Edge>> star_product_factorization(std::span<const int> a,
                                                          std::span<const int> b,
                                                          const PairList& m1,
                                                          const PairList& m2);

struct MergeResult {
  LabeledGraph graph;
  // Pairs consumed from A and from B, index-aligned: the cross edges are
  // pairs_a[j].first - pairs_b[j].first and pairs_a[j].second - pairs_b[j].second.
  PairList pairs_a;
  PairList pairs_b;
  int switches = 0;
};

// Rewires g by degree-preserving 2-switches inside A u B until it contains a
// star product of the two cliques. Each round takes the three smallest
// remaining labels on each side; an existing cross matching of size two is
// used directly (lexicographically smallest), otherwise the smallest
// v1 < v2, u1 < u2 with all four cross edges absent are switched:
// v1v2, u1u2 -> v1u1, v2u2. Throws std::invalid_argument unless g[A] and g[B]
// are complete, disjoint and of equal odd size >= 3.
MergeResult merge_cliques(const LabeledGraph& g, std::span<const int> a, std::span<const int> b);

struct DisjointMatchings {
  LabeledGraph graph;
  std::vector<Matching> matchings;
};

// h pairwise edge-disjoint perfect matchings inside one realization of seq.
// Realizes the canonical h-factor through hfactor_oracle, then either
// 1-factorizes each block (h odd) or merges consecutive block pairs and
// 1-factorizes the star products (h even). Returns nullopt when the
// double-star check fails or the oracle finds no realization. Throws
// std::invalid_argument for odd n, (h+1) not dividing n, or d_n < h.
std::optional<DisjointMatchings> disjoint_pms(const DegreeSequence& seq, int h);

// Every labelled graph with deg(i) = d_i. Throws ResourceLimit past
// max_results graphs.
std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& seq,
                                                 std::size_t max_results = 1'000'000);

// Every spanning 2-regular subgraph of g. Throws ResourceLimit past
// max_results factors.
std::vector<SpanningFactor> enumerate_two_factors(const LabeledGraph& g,
                                                  std::size_t max_results = 1'000'000);

// Connected components with at least one edge, as vertex lists. Cycles
// (every vertex of degree 2) are listed in traversal order starting at their
// smallest vertex and stepping to its larger neighbour; other components are
// sorted. Components are ordered by smallest vertex.
std::vector<std::vector<int>> factor_components(const LabeledGraph& g);

// Graph on n vertices made of the given cycles (each a vertex list of
// length >= 3, closing edge implied).
LabeledGraph cycles_graph(int n, const std::vector<std::vector<int>>& cycles);

struct ScanEntry {
  std::vector<int> sequence;
  bool doublestar = false;
  bool oracle = false;
};

struct ConjectureScan {
  int n = 0;
  int h = 0;
  std::size_t sequences = 0;
  // Oracle realizes the factor but the check rejects: contradicts the proven
  // direction, so any entry here is a bug.
  std::vector<ScanEntry> forward_violations;
  // Check passes but the oracle finds no realization: a counterexample to
  // the open direction.
  std::vector<ScanEntry> reverse_mismatches;
};

// Every weakly decreasing sequence of length n with entries in [1, n-1].
// Requires (h+1) | n and n <= 12.
ConjectureScan conjecture_scan(int n, int h);

struct SupergraphScan {
  std::uint64_t graphs = 0;          // supergraphs of the canonical factor visited
  std::uint64_t decreasing = 0;      // of those, with weakly decreasing labelled degrees
  std::size_t distinct_sequences = 0;
  std::vector<std::vector<int>> violations;  // degree vectors failing the check
};

// Visits every graph on [n] containing the canonical h-factor and checks
// the double-star inequalities on each weakly decreasing labelled degree
// vector. Requires (h+1) | n and at most 30 edges outside the factor.
SupergraphScan supergraph_scan(int n, int h);

}  // namespace degseq

#endif  // DEGSEQ_HFACTOR_HPP_
