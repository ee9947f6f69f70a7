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

#include "degseq/graphic.hpp"

#include <algorithm>
#include <numeric>

#include "degseq/blossom.hpp"
#include "inequality.hpp"

namespace degseq {

std::string to_string(InequalityFamily family) {
  switch (family) {
    case InequalityFamily::kErdosGallai:
      return "EG";
    case InequalityFamily::kStar:
      return "STAR";
    case InequalityFamily::kDoubleStar:
      return "DOUBLESTAR";
  }
  return "?";
}

std::vector<int> CheckReport::failing_ks() const {
  std::vector<int> out;
  for (const CheckRow& r : rows)
    if (r.slack() < 0) out.push_back(r.k);
  return out;
}

CheckReport eg_check(std::span<const int> d) {
  if (d.empty() || !is_weakly_decreasing(d) || d.back() < 0)
    throw std::invalid_argument("EG check needs a non-empty weakly decreasing non-negative sequence");
  detail::DecreasingSums sums(d);
  CheckReport report;
  report.family = InequalityFamily::kErdosGallai;
  report.sequence.assign(d.begin(), d.end());
  report.parity_ok = sums.total() % 2 == 0;
  report.structural_ok = true;
  const int n = sums.n();
  report.rows.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    CheckRow row{k, sums.head(k), detail::eg_rhs(sums, k)};
    if (row.slack() < 0 && !report.first_fail_k) report.first_fail_k = k;
    report.rows.push_back(row);
  }
  report.verdict = report.parity_ok && report.structural_ok && !report.first_fail_k;
  return report;
}

CheckReport eg_check(const DegreeSequence& seq) { return eg_check(seq.entries()); }

bool is_graphic(std::span<const int> d) { return eg_check(d).verdict; }

LabeledGraph hh_realize(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n == 0) throw std::invalid_argument("empty sequence");
  for (int x : d)
    if (x < 0 || x > n - 1) throw std::invalid_argument("sequence is not graphic");
  std::vector<int> residual(d.begin(), d.end());
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  LabeledGraph g(n);
  // Larger residual first, smaller label on ties.
  auto before = [&](int a, int b) {
    if (residual[static_cast<std::size_t>(a)] != residual[static_cast<std::size_t>(b)])
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    return a < b;
  };
  while (true) {
    int pivot = -1;
    for (int v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)] || residual[static_cast<std::size_t>(v)] == 0) continue;
      if (pivot == -1 || before(v, pivot)) pivot = v;
    }
    if (pivot == -1) break;
    done[static_cast<std::size_t>(pivot)] = 1;
    order.clear();
    for (int v = 0; v < n; ++v)
      if (!done[static_cast<std::size_t>(v)]) order.push_back(v);
    std::sort(order.begin(), order.end(), before);
    const int need = residual[static_cast<std::size_t>(pivot)];
    if (need > static_cast<int>(order.size()))
      throw std::invalid_argument("sequence is not graphic");
    for (int i = 0; i < need; ++i) {
      const int u = order[static_cast<std::size_t>(i)];
      if (residual[static_cast<std::size_t>(u)] == 0)
        throw std::invalid_argument("sequence is not graphic");
      --residual[static_cast<std::size_t>(u)];
      g.add_edge(pivot + 1, u + 1);
    }
    residual[static_cast<std::size_t>(pivot)] = 0;
  }
  return g;
}

LabeledGraph hh_realize(const DegreeSequence& seq) { return hh_realize(seq.entries()); }

bool lovasz_pm_check(const DegreeSequence& seq) {
  if (seq.n() % 2 != 0) return false;
  if (!eg_check(seq).verdict) return false;
  std::vector<int> reduced(seq.entries().begin(), seq.entries().end());
  for (int& x : reduced) --x;
  return eg_check(reduced).verdict;
}

Matching max_matching(const LabeledGraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)].push_back(e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)].push_back(e.u - 1);
  }
  const std::vector<int> mate = maximum_matching(adj);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const int w = mate[static_cast<std::size_t>(v)];
    if (w > v) edges.push_back({v + 1, w + 1});
  }
  return Matching(n, std::move(edges));
}

std::optional<LabeledGraph> f_factor(const LabeledGraph& host, std::span<const int> f) {
  const int n = host.n();
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("f has length " + std::to_string(f.size()) + ", expected " +
                                std::to_string(n));
  for (int v = 1; v <= n; ++v) {
    const int target = f[static_cast<std::size_t>(v - 1)];
    if (target < 0 || target > host.degree(v))
      throw std::invalid_argument("f(" + std::to_string(v) + ")=" + std::to_string(target) +
                                  " outside [0, deg(v)]");
  }
  const std::int64_t f_sum = std::accumulate(f.begin(), f.end(), std::int64_t{0});
  if (f_sum % 2 != 0) return std::nullopt;

  // Gadget: every host edge e=(a,b) gets one port at a and one at b, joined to
  // each other. Vertex v also gets deg(v)-f(v) core ports, joined to every
  // port of v. A perfect matching leaves exactly f(v) ports of v paired across
  // their host edge, and those edges form the f-factor.
  const std::vector<Edge> edges = host.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> ports_of(static_cast<std::size_t>(n));
  int next = 0;
  for (const Edge& e : edges) {
    ports_of[static_cast<std::size_t>(e.u - 1)].push_back(next++);
    ports_of[static_cast<std::size_t>(e.v - 1)].push_back(next++);
  }
  std::vector<std::vector<int>> core_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int cores = host.degree(v + 1) - f[static_cast<std::size_t>(v)];
    for (int c = 0; c < cores; ++c) core_of[static_cast<std::size_t>(v)].push_back(next++);
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(next));
  for (int i = 0; i < m; ++i) {
    adj[static_cast<std::size_t>(2 * i)].push_back(2 * i + 1);
    adj[static_cast<std::size_t>(2 * i + 1)].push_back(2 * i);
  }
  for (int v = 0; v < n; ++v) {
    for (int port : ports_of[static_cast<std::size_t>(v)]) {
      for (int core : core_of[static_cast<std::size_t>(v)]) {
        adj[static_cast<std::size_t>(port)].push_back(core);
        adj[static_cast<std::size_t>(core)].push_back(port);
      }
    }
  }
  const std::vector<int> mate = maximum_matching(adj, /*stop_when_exposed=*/true);
  if (std::find(mate.begin(), mate.end(), -1) != mate.end()) return std::nullopt;

  LabeledGraph factor(n);
  for (int i = 0; i < m; ++i)
    if (mate[static_cast<std::size_t>(2 * i)] == 2 * i + 1)
      factor.add_edge(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
  for (int v = 1; v <= n; ++v)
    if (factor.degree(v) != f[static_cast<std::size_t>(v - 1)])
      throw InvariantViolation("f-factor gadget produced wrong degree at vertex " +
                               std::to_string(v));
  return factor;
}

}  // namespace degseq
