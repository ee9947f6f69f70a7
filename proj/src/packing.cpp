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

#include "degseq/packing.hpp"

#include <bit>

#include "degseq/graphic.hpp"

namespace degseq {

BindingNumber binding_number(const LabeledGraph& g) {
  const int n = g.n();
  if (n < 1 || n > kBindingNumberMaxN)
    throw std::invalid_argument("binding number scan supports 1 <= n <= " +
                                std::to_string(kBindingNumberMaxN));
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v)
    for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(v - 1)] |= 1u << (w - 1);
  const std::uint32_t all = (1u << n) - 1;

  std::optional<BindingNumber> best;
  std::int64_t best_num = 0, best_den = 1;
  for (std::uint32_t x = 1; x <= all; ++x) {
    std::uint32_t reach = 0;
    for (std::uint32_t rest = x; rest; rest &= rest - 1)
      reach |= nbr[static_cast<std::size_t>(std::countr_zero(rest))];
    if (reach == all) continue;
    const std::int64_t num = std::popcount(reach), den = std::popcount(x);
    if (best && num * best_den >= best_num * den) continue;
    best_num = num;
    best_den = den;
    BindingNumber b{boost::rational<std::int64_t>(num, den), {}};
    for (int v = 1; v <= n; ++v)
      if (x >> (v - 1) & 1u) b.witness.push_back(v);
    best = std::move(b);
  }
  if (!best) throw std::invalid_argument("every vertex set has full neighbourhood");
  return *best;
}

bool packing_hypothesis(const DegreeSequence& pi1, const DegreeSequence& pi2) {
  return 2 * static_cast<std::int64_t>(pi1.max()) * pi2.max() < pi1.n();
}

std::optional<Packing> pack(const DegreeSequence& pi1, const DegreeSequence& pi2) {
  const int n = pi1.n();
  if (pi2.n() != n) throw std::invalid_argument("sequences differ in length");
  if (n < 3) throw std::invalid_argument("packing needs n >= 3");
  if (!eg_check(pi1).verdict || !eg_check(pi2).verdict)
    throw std::invalid_argument("packing needs two graphic sequences");

  const bool swapped = pi2.max() > pi1.max();
  const DegreeSequence& big = swapped ? pi2 : pi1;
  const DegreeSequence& small = swapped ? pi1 : pi2;
  LabeledGraph g1 = hh_realize(big);
  const LabeledGraph host = complement(g1);
  std::optional<LabeledGraph> g2;
  bool fits = true;
  for (int v = 1; v <= n; ++v) fits = fits && small[v] <= host.degree(v);
  if (fits) g2 = f_factor(host, small.entries());

  if (!g2) {
    if (packing_hypothesis(pi1, pi2))
      throw InvariantViolation("no packing of " + to_string(pi1) + " and " + to_string(pi2) +
                               " although 2 d1 d1' < n");
    return std::nullopt;
  }
  for (const Edge& e : g2->edges())
    if (g1.has_edge(e.u, e.v)) throw InvariantViolation("packing halves share an edge");
  if (!has_degrees(g1, big.entries()) || !has_degrees(*g2, small.entries()))
    throw InvariantViolation("packing degree audit failed");
  if (swapped) return Packing{std::move(*g2), std::move(g1)};
  return Packing{std::move(g1), std::move(*g2)};
}

}  // namespace degseq
