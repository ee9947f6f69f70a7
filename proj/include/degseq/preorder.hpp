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

#ifndef DEGSEQ_PREORDER_HPP_
#define DEGSEQ_PREORDER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "degseq/core.hpp"

namespace degseq {

inline constexpr int kPreorderMaxN = 8;

// The realizability preorder on perfect matchings of K_n: N <= M when every
// degree sequence that can realize M can also realize N.
struct PreorderTable {
  int n = 0;
  std::vector<Matching> matchings;
  // Every weakly decreasing sequence with entries in [1, n-1] for which some
  // realization contains a perfect matching.
  std::vector<DegreeSequence> sequences;
  // realizable[s][m]: sequences[s] can realize matchings[m].
  std::vector<std::vector<char>> realizable;
  // leq[a][b]: matchings[a] <= matchings[b].
  std::vector<std::vector<char>> leq;

  int index_of(const Matching& m) const;
  bool is_leq(int a, int b) const { return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
};

// All weakly decreasing sequences of length n with entries in [1, n-1], in
// lexicographically decreasing order.
std::vector<DegreeSequence> all_sequences(int n);

// Requires n in {2, 4, 6, 8}. The realizable matrix is filled by `threads`
// workers (0 = hardware concurrency) over disjoint row ranges, so the result
// does not depend on the thread count.
PreorderTable build_preorder(int n, unsigned threads = 0);

// Quotient by mutual comparability. Classes hold matching indices and are
// ordered by their first member; covers are (lower, upper) class indices.
struct HasseDiagram {
  std::vector<std::vector<int>> classes;
  std::vector<std::pair<int, int>> covers;
};

HasseDiagram hasse_diagram(const PreorderTable& table);

// The Hasse diagram as DOT text, edges pointing from lower to upper class.
std::string hasse_dot(const PreorderTable& table);

struct ConjectureReport {
  // Distinct pairs (a,b), a < b, with a <= b <= a.
  std::vector<std::pair<int, int>> antisymmetry_violations;
  // Pairs (lower, upper) with lower <= upper, lower != upper, but lower not
  // reachable from upper through single switches.
  std::vector<std::pair<int, int>> switch_path_violations;
  std::size_t comparable_pairs = 0;
  std::size_t incomparable_pairs = 0;

  bool antisymmetric() const { return antisymmetry_violations.empty(); }
  bool switch_converse_holds() const { return switch_path_violations.empty(); }
};

ConjectureReport check_conjectures(const PreorderTable& table);

}  // namespace degseq

#endif  // DEGSEQ_PREORDER_HPP_
