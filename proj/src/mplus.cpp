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

#include "degseq/mplus.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "inequality.hpp"

namespace degseq {
namespace {

using boost::multiprecision::cpp_int;

bool is_mplus_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  return a % 2 == 1 && b == a + 1;
}

// 1-based view over a working degree vector.
struct Degrees {
  std::vector<int>& d;
  int& operator()(int i) { return d[static_cast<std::size_t>(i - 1)]; }
  int n() const { return static_cast<int>(d.size()); }
};

void add_mplus_pairs(LabeledGraph& g, int from) {
  for (int j = from; j + 1 <= g.n(); j += 2) g.add_edge(j, j + 1);
}

// (k^{k+1}, 2, 1, ..., 1) with k even.
std::optional<LabeledGraph> try_pattern_a(std::vector<int>& dv, int& k_out) {
  Degrees d{dv};
  const int n = d.n();
  const int k = d(1);
  if (k < 2 || k % 2 != 0 || n < k + 2) return std::nullopt;
  for (int i = 1; i <= k + 1; ++i)
    if (d(i) != k) return std::nullopt;
  if (d(k + 2) != 2) return std::nullopt;
  for (int i = k + 3; i <= n; ++i)
    if (d(i) != 1) return std::nullopt;
  LabeledGraph g(n);
  for (int a = 1; a <= k + 1; ++a)
    for (int b = a + 1; b <= k + 1; ++b)
      if (!(a == k && b == k + 1)) g.add_edge(a, b);
  g.add_edge(k, k + 2);
  g.add_edge(k + 1, k + 2);
  add_mplus_pairs(g, k + 3);
  k_out = k;
  return g;
}

// ((k+1)^{k+2}, 2, 1, ..., 1) with k odd.
std::optional<LabeledGraph> try_pattern_b(std::vector<int>& dv, int& k_out) {
  Degrees d{dv};
  const int n = d.n();
  const int k = d(1) - 1;
  if (k < 1 || k % 2 != 1 || n < k + 3) return std::nullopt;
  for (int i = 1; i <= k + 2; ++i)
    if (d(i) != k + 1) return std::nullopt;
  if (d(k + 3) != 2) return std::nullopt;
  for (int i = k + 4; i <= n; ++i)
    if (d(i) != 1) return std::nullopt;
  LabeledGraph g(n);
  for (int a = 1; a <= k + 2; ++a)
    for (int b = a + 1; b <= k + 2; ++b)
      if (!(a == k + 1 && b == k + 2)) g.add_edge(a, b);
  g.add_edge(k + 1, k + 3);
  g.add_edge(k + 2, k + 3);
  add_mplus_pairs(g, k + 4);
  k_out = k;
  return g;
}

// Head (k+1)^{k+1} with k even and tail excess sum_{i>=k+2} (d_i - 1) == k.
std::optional<LabeledGraph> try_pattern_c(std::vector<int>& dv, int& k_out) {
  Degrees d{dv};
  const int n = d.n();
  const int k = d(1) - 1;
  if (k < 2 || k % 2 != 0 || n < k + 2) return std::nullopt;
  for (int i = 1; i <= k + 1; ++i)
    if (d(i) != k + 1) return std::nullopt;
  std::int64_t excess = 0;
  for (int i = k + 2; i <= n; ++i) excess += d(i) - 1;
  if (excess != k) return std::nullopt;
  LabeledGraph g(n);
  for (int a = 1; a <= k + 1; ++a)
    for (int b = a + 1; b <= k + 1; ++b) g.add_edge(a, b);
  g.add_edge(k + 1, k + 2);
  add_mplus_pairs(g, k + 3);
  // Each of 1..k still needs exactly one edge, and the tail needs exactly k.
  int next = 1;
  for (int i = k + 2; i <= n; ++i)
    for (int c = 0; c < d(i) - 1; ++c) g.add_edge(i, next++);
  k_out = k;
  return g;
}

// Largest p with d_p >= 2, then t: p-1 when d_1 == ... == d_p, otherwise the
// largest t < p with d_t > d_{t+1}.
std::pair<int, int> reduction_pair(std::vector<int>& dv) {
  Degrees d{dv};
  int p = d.n();
  while (p >= 1 && d(p) < 2) --p;
  if (p < 1) throw InvariantViolation("no entry >= 2 above the base case");
  if (d(1) == d(p)) {
    if (p < 2) throw InvariantViolation("degree excess concentrated on one vertex");
    return {p - 1, p};
  }
  int t = p - 1;
  while (d(t) == d(t + 1)) --t;
  return {t, p};
}

// Another reduction pair for when the default one breaks the star
// inequalities and no terminal pattern applies. Candidates keep the reduced
// vector weakly decreasing (t and p end their value blocks, or t = p - 1
// inside p's block) and satisfy d_t <= p - 1, which is what the unwinding
// exchange needs. Scans p, then t, from the right.
std::optional<std::pair<int, int>> fallback_pair(std::vector<int>& dv) {
  Degrees d{dv};
  const int n = d.n();
  for (int p = n; p >= 2; --p) {
    if (d(p) < 2 || (p < n && d(p) == d(p + 1))) continue;
    for (int t = p - 1; t >= 1; --t) {
      if (t != p - 1 && d(t) == d(t + 1)) continue;
      if (d(t) > p - 1) continue;
      --d(t);
      --d(p);
      const bool ok = star_holds(dv);
      ++d(t);
      ++d(p);
      if (ok) return std::pair{t, p};
    }
  }
  return std::nullopt;
}

// Re-inserts (t,p) into a realization of the reduced sequence. When (t,p) is
// already present, exchange the square x-y, p-t for x-t, y-p first.
void unwind_step(LabeledGraph& g, int t, int p, MplusTrace* trace) {
  if (!g.has_edge(t, p)) {
    g.add_edge(t, p);
    return;
  }
  const int n = g.n();
  int x = 0;
  for (int c = 1; c <= p; ++c) {
    if (c != t && !g.has_edge(c, t)) {
      x = c;
      break;
    }
  }
  if (x == 0) throw InvariantViolation("no vertex x <= p outside N(t)");
  int y = 0;
  for (int c = 1; c <= n; ++c) {
    if (c != p && g.has_edge(c, x) && !g.has_edge(c, p) && !is_mplus_edge(x, c)) {
      y = c;
      break;
    }
  }
  if (y == 0) throw InvariantViolation("no vertex y in N(x) \\ N(p) off M+");
  g.remove_edge(x, y);
  g.add_edge(x, t);
  g.add_edge(y, p);
  if (trace) ++trace->exchanges;
}

}  // namespace

CheckReport star_check(const DegreeSequence& seq) {
  detail::DecreasingSums sums(seq.entries());
  CheckReport report;
  report.family = InequalityFamily::kStar;
  report.h = 1;
  report.sequence.assign(seq.entries().begin(), seq.entries().end());
  report.parity_ok = sums.total() % 2 == 0;
  report.structural_ok = seq.n() % 2 == 0;
  for (int k = 1; k <= seq.n(); ++k) {
    CheckRow row{k, sums.head(k), detail::star_rhs(sums, k)};
    if (row.slack() < 0 && !report.first_fail_k) report.first_fail_k = k;
    report.rows.push_back(row);
  }
  report.verdict = report.parity_ok && report.structural_ok && !report.first_fail_k;
  return report;
}

bool star_holds(std::span<const int> d) {
  if (d.empty() || d.size() % 2 != 0) return false;
  detail::DecreasingSums sums(d);
  if (sums.total() % 2 != 0) return false;
  for (int k = 1; k <= sums.n(); ++k)
    if (sums.head(k) > detail::star_rhs(sums, k)) return false;
  return true;
}

LabeledGraph realize_mplus(const DegreeSequence& seq, MplusTrace* trace) {
  if (!star_check(seq).verdict)
    throw std::invalid_argument("sequence " + to_string(seq) + " cannot realize M+");
  MplusTrace local;
  MplusTrace& tr = trace ? *trace : local;
  tr = MplusTrace{};

  const int n = seq.n();
  std::vector<int> d(seq.entries().begin(), seq.entries().end());
  std::int64_t sum = seq.sum();
  std::vector<std::pair<int, int>> steps;
  LabeledGraph g;
  while (true) {
    if (sum == n) {
      g = LabeledGraph(n);
      add_mplus_pairs(g, 1);
      tr.terminal = MplusTerminal::kBase;
      break;
    }
    auto [t, p] = reduction_pair(d);
    --d[static_cast<std::size_t>(t - 1)];
    --d[static_cast<std::size_t>(p - 1)];
    if (star_holds(d)) {
      steps.emplace_back(t, p);
      sum -= 2;
      continue;
    }
    ++d[static_cast<std::size_t>(t - 1)];
    ++d[static_cast<std::size_t>(p - 1)];
    int k = 0;
    if (auto a = try_pattern_a(d, k)) {
      g = std::move(*a);
      tr.terminal = MplusTerminal::kPatternA;
    } else if (auto b = try_pattern_b(d, k)) {
      g = std::move(*b);
      tr.terminal = MplusTerminal::kPatternB;
    } else if (auto c = try_pattern_c(d, k)) {
      g = std::move(*c);
      tr.terminal = MplusTerminal::kPatternC;
    } else if (auto alt = fallback_pair(d)) {
      --d[static_cast<std::size_t>(alt->first - 1)];
      --d[static_cast<std::size_t>(alt->second - 1)];
      steps.push_back(*alt);
      sum -= 2;
      ++tr.fallbacks;
      continue;
    } else {
      std::vector<int> copy = d;
      throw InvariantViolation("no terminal pattern or reduction applies to " +
                               to_string(DegreeSequence(std::move(copy))));
    }
    tr.pattern_k = k;
    break;
  }
  tr.reductions = static_cast<std::int64_t>(steps.size());

  if (!has_degrees(g, d) || !contains_matching(g, canonical_matching(n, Canonical::kPlus)))
    throw InvariantViolation("terminal construction failed its audit");
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    unwind_step(g, it->first, it->second, &tr);
  return g;
}

bool corollary_bound_holds(const DegreeSequence& seq) {
  const int n = seq.n();
  if (n % 2 != 0) throw std::invalid_argument("corollary bound needs even n");
  if (2 * seq.min() < n) throw std::invalid_argument("corollary bound needs d_n >= n/2");
  if (!eg_check(seq).verdict) throw std::invalid_argument("corollary bound needs a graphic sequence");
  cpp_int s = 0;
  for (int i = 1; i <= n / 2; ++i) s += seq[i];
  const cpp_int nn = n;
  const cpp_int lhs = (4 * s + nn * nn) * (4 * s + nn * nn);
  const cpp_int rhs = 8 * nn * nn * nn * nn - 16 * nn * nn * nn;
  return lhs <= rhs;
}

std::uint64_t isqrt(std::uint64_t value) {
  if (value < 2) return value;
  std::uint64_t x = value;
  std::uint64_t y = x / 2 + 1;
  while (y < x) {
    x = y;
    y = (x + value / x) / 2;
  }
  return x;
}

TightnessExample tightness_instance(int n) {
  if (n <= 2 || n % 2 != 0)
    throw std::invalid_argument("tightness instance needs even n > 2");
  const auto nn = static_cast<std::uint64_t>(n);
  const std::uint64_t root = isqrt(2 * nn * nn);  // floor(n sqrt 2)

  TightnessExample ex;
  ex.n = n;
  ex.d_star = static_cast<int>(root) - 1 - n / 2;
  ex.k_star = (ex.d_star + n / 2 + 1) / 2;
  ex.sequence.assign(static_cast<std::size_t>(ex.k_star), ex.d_star);
  ex.sequence.resize(static_cast<std::size_t>(n), n / 2);
  const DegreeSequence seq(ex.sequence);
  ex.sum_parity_even = seq.sum() % 2 == 0;
  ex.eg = eg_check(seq);
  ex.is_graphic = ex.eg.verdict;
  ex.star = star_check(seq);
  ex.star_verdict = ex.star.verdict;
  ex.fails_star_at_k_star = ex.star.row(ex.k_star).slack() < 0;
  const cpp_int four_root_plus_one = 4 * cpp_int(root) + 1;
  ex.alpha_at_most_quarter = 32 * cpp_int(nn) * nn <= four_root_plus_one * four_root_plus_one;
  ex.alpha = static_cast<double>(std::sqrt(2.0L) * static_cast<long double>(n) -
                                 static_cast<long double>(root));
  return ex;
}

}  // namespace degseq
