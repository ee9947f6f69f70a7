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

#ifndef DEGSEQ_PACKING_HPP_
#define DEGSEQ_PACKING_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "degseq/core.hpp"

namespace degseq {

inline constexpr int kBindingNumberMaxN = 24;

struct BindingNumber {
  boost::rational<std::int64_t> value;
  // The first minimizing set in increasing bitmask order (bit i-1 = vertex i).
  std::vector<int> witness;
};

// min |N(X)| / |X| over non-empty X with N(X) != V, by exhaustive scan.
// Throws std::invalid_argument for n > kBindingNumberMaxN or when no set
// qualifies.
BindingNumber binding_number(const LabeledGraph& g);

struct Packing {
  LabeledGraph first;   // realizes pi1
  LabeledGraph second;  // realizes pi2, edge-disjoint from first
};

// 2 * d_1(pi1) * d_1(pi2) < n: the packing is then guaranteed for any
// realization of the larger-headed sequence.
bool packing_hypothesis(const DegreeSequence& pi1, const DegreeSequence& pi2);

// Realizes the sequence with the larger first entry by Havel-Hakimi (pi1 on
// ties) and looks for the other as an f-factor of its complement. Returns
// nullopt when that f-factor does not exist. Without packing_hypothesis this
// only rules out the chosen realization; with it, absence is impossible and
// raises InvariantViolation. Throws std::invalid_argument on length mismatch,
// n < 3, or a non-graphic input.
std::optional<Packing> pack(const DegreeSequence& pi1, const DegreeSequence& pi2);

}  // namespace degseq

#endif  // DEGSEQ_PACKING_HPP_
