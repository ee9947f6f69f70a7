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

#ifndef DEGSEQ_GRAPHIC_HPP_
#define DEGSEQ_GRAPHIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/core.hpp"

namespace degseq {

enum class InequalityFamily { kErdosGallai, kStar, kDoubleStar };

std::string to_string(InequalityFamily family);

// One row of an inequality family: lhs <= rhs must hold at index k.
struct CheckRow {
  int k = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::int64_t slack() const { return rhs - lhs; }

  bool operator==(const CheckRow&) const = default;
};

// Ledger of an inequality check. verdict is parity_ok && structural_ok && all
// slacks non-negative; first_fail_k is set exactly when some row fails.
struct CheckReport {
  InequalityFamily family = InequalityFamily::kErdosGallai;
  int h = 0;  // regularity for kDoubleStar, 1 for kStar, 0 for kErdosGallai
  std::vector<int> sequence;
  std::vector<CheckRow> rows;
  bool parity_ok = false;
  bool structural_ok = false;
  bool verdict = false;
  std::optional<int> first_fail_k;

  std::vector<int> failing_ks() const;
  const CheckRow& row(int k) const { return rows.at(static_cast<std::size_t>(k - 1)); }

  bool operator==(const CheckReport&) const = default;
};

// Erdos-Gallai test. The span overload accepts any weakly decreasing
// non-negative sequence (zeros allowed), and throws std::invalid_argument
// otherwise.
CheckReport eg_check(const DegreeSequence& seq);
CheckReport eg_check(std::span<const int> d);
bool is_graphic(std::span<const int> d);

// Havel-Hakimi realization: repeatedly take the vertex with the largest
// residual degree (smallest label on ties) and join it to the vertices with
// the next-largest residuals (smallest labels on ties). Throws
// std::invalid_argument when the sequence is not graphic.
LabeledGraph hh_realize(const DegreeSequence& seq);
LabeledGraph hh_realize(std::span<const int> d);

// Some realization contains a perfect matching: n even, seq graphic and
// (d_1 - 1, ..., d_n - 1) graphic.
bool lovasz_pm_check(const DegreeSequence& seq);

// Maximum-cardinality matching of g.
Matching max_matching(const LabeledGraph& g);

// Spanning subgraph of host with deg(v) == f[v-1] for all v, decided exactly
// by the vertex-gadget reduction to perfect matching. Throws
// std::invalid_argument when f has the wrong length, a negative entry or an
// entry above the host degree.
std::optional<LabeledGraph> f_factor(const LabeledGraph& host, std::span<const int> f);

}  // namespace degseq

#endif  // DEGSEQ_GRAPHIC_HPP_
