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

#ifndef DEGSEQ_MPLUS_HPP_
#define DEGSEQ_MPLUS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/graphic.hpp"

namespace degseq {

// Realizability of M+ = {(1,2),(3,4),...}. For every k in [n]:
//   k even:  sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i - 1, k)
//   k odd:   sum_{i<=k} d_i <= k(k-1) + min(d_{k+1}, k)
//                                      + sum_{i>k+1} min(d_i - 1, k)
// together with an even degree sum and an even n (structural_ok).
CheckReport star_check(const DegreeSequence& seq);

// Same verdict as star_check(...).verdict without building the ledger. Accepts
// any weakly decreasing sequence of positive entries.
bool star_holds(std::span<const int> d);

// How the constructive realizer finished.
enum class MplusTerminal {
  kBase,      // every degree reached 1: the graph is M+ itself
  kPatternA,  // (k^{k+1}, 2, 1, ..., 1), k even
  kPatternB,  // ((k+1)^{k+2}, 2, 1, ..., 1), k odd
  kPatternC,  // (k+1)^{k+1} head, k even, tail excess exactly k
};

struct MplusTrace {
  // Reductions (t,p) applied before reaching the terminal case.
  std::int64_t reductions = 0;
  // Reductions whose edge (t,p) was already present and needed the square
  // exchange when unwinding.
  std::int64_t exchanges = 0;
  // Reductions where the default pair broke the star inequalities and no
  // terminal pattern matched, so another decreasing-order-preserving pair
  // was used.
  std::int64_t fallbacks = 0;
  MplusTerminal terminal = MplusTerminal::kBase;
  int pattern_k = 0;
};

// Realization of seq containing M+. Follows the inductive construction:
// decrement the pair (t,p) while the reduced sequence still satisfies the
// star inequalities, finish with M+ or one of the three explicit terminal
// constructions, then unwind, re-adding (t,p) and using a square exchange
// when it is already present. p is the last index with d_p >= 2 and t is
// p - 1 when d_1 = ... = d_p, else the last t < p with d_t > d_{t+1}. When
// that reduction fails and no terminal construction applies (for example
// 5,4,4,4,4,3), another pair is searched for; see MplusTrace::fallbacks.
//
// Throws std::invalid_argument if star_check fails, and InvariantViolation if
// neither a terminal construction nor a reduction applies.
LabeledGraph realize_mplus(const DegreeSequence& seq, MplusTrace* trace = nullptr);

// Sufficient condition on the first half of the sequence, decided exactly:
//   (4S + n^2)^2 <= 8n^4 - 16n^3,  S = d_1 + ... + d_{n/2}.
// Requires n even, d_n >= n/2 and seq graphic; throws std::invalid_argument
// otherwise.
bool corollary_bound_holds(const DegreeSequence& seq);

// Floor of the square root, exact for any non-negative input.
std::uint64_t isqrt(std::uint64_t value);

// The near-extremal sequence (d*^{k*}, (n/2)^{n-k*}) for even n > 2.
struct TightnessExample {
  int n = 0;
  int d_star = 0;
  int k_star = 0;
  std::vector<int> sequence;
  bool sum_parity_even = false;
  bool is_graphic = false;
  // The star inequality row at k* has negative slack.
  bool fails_star_at_k_star = false;
  // Star inequality verdict over all rows.
  bool star_verdict = false;
  CheckReport eg;
  CheckReport star;
  // frac(n * sqrt 2), for reporting only.
  double alpha = 0.0;
  // frac(n * sqrt 2) <= 1/4, decided exactly.
  bool alpha_at_most_quarter = false;
};

TightnessExample tightness_instance(int n);

}  // namespace degseq

#endif  // DEGSEQ_MPLUS_HPP_
