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

#include "degseq/hfactor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_set>

#include "degseq/preorder.hpp"
#include "inequality.hpp"

namespace degseq {
namespace {

void require_clique(const LabeledGraph& g, std::span<const int> vs, const char* name) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j]))
        throw std::invalid_argument(std::string("vertex set ") + name + " is not a clique");
}

void require_odd_pair(std::span<const int> a, std::span<const int> b, int n) {
  if (a.size() != b.size() || a.size() < 3 || a.size() % 2 == 0)
    throw std::invalid_argument("clique sides must have equal odd size >= 3");
  std::set<int> seen;
  for (auto side : {a, b}) {
    for (int v : side) {
      if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
      if (!seen.insert(v).second) throw std::invalid_argument("clique sides overlap");
    }
  }
}

// The vertex of `side` left uncovered by the near-perfect matching `m`.
int missed_vertex(std::span<const int> side, const PairList& m) {
  if (2 * m.size() + 1 != side.size())
    throw std::invalid_argument("near-perfect matching has the wrong size");
  std::set<int> left(side.begin(), side.end());
  for (auto [x, y] : m) {
    if (x == y || !left.erase(x) || !left.erase(y))
      throw std::invalid_argument("pair list is not a matching of the clique");
  }
  return *left.begin();
}

// Near-1-factorization of K_side with m as one of its classes. Returns the
// remaining classes keyed by the vertex they miss.
std::vector<std::pair<int, std::vector<Edge>>> classes_around(std::span<const int> side,
                                                              const PairList& m) {
  const int size = static_cast<int>(side.size());
  const int c = missed_vertex(side, m);
  // Position t -> a_t, size - t -> b_t, size -> c; class size is then m.
  std::vector<int> label(static_cast<std::size_t>(size + 1));
  label[static_cast<std::size_t>(size)] = c;
  for (int t = 1; t <= static_cast<int>(m.size()); ++t) {
    label[static_cast<std::size_t>(t)] = m[static_cast<std::size_t>(t - 1)].first;
    label[static_cast<std::size_t>(size - t)] = m[static_cast<std::size_t>(t - 1)].second;
  }
  std::vector<std::pair<int, std::vector<Edge>>> out;
  const auto base = near_one_factorization(size);
  for (int r = 1; r < size; ++r) {
    std::vector<Edge> cls;
    for (const Edge& e : base[static_cast<std::size_t>(r - 1)])
      cls.push_back(Edge::of(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]));
    std::sort(cls.begin(), cls.end());
    out.emplace_back(label[static_cast<std::size_t>(r)], std::move(cls));
  }
  return out;
}

const std::vector<Edge>& class_missing(const std::vector<std::pair<int, std::vector<Edge>>>& classes,
                                       int v) {
  for (const auto& [missed, cls] : classes)
    if (missed == v) return cls;
  throw InvariantViolation("no near-perfect class misses vertex " + std::to_string(v));
}

}  // namespace

CheckReport doublestar_check(const DegreeSequence& seq, int h) {
  if (h < 1) throw std::invalid_argument("regularity h must be >= 1");
  detail::DecreasingSums sums(seq.entries());
  CheckReport report;
  report.family = InequalityFamily::kDoubleStar;
  report.h = h;
  report.sequence.assign(seq.entries().begin(), seq.entries().end());
  report.parity_ok = sums.total() % 2 == 0;
  report.structural_ok = seq.n() % (h + 1) == 0;
  for (int k = 1; k <= seq.n(); ++k) {
    CheckRow row{k, sums.head(k), detail::doublestar_rhs(sums, k, h)};
    if (row.slack() < 0 && !report.first_fail_k) report.first_fail_k = k;
    report.rows.push_back(row);
  }
  report.verdict = report.parity_ok && report.structural_ok && !report.first_fail_k;
  return report;
}

std::optional<LabeledGraph> realize_factor(const DegreeSequence& seq, const LabeledGraph& factor) {
  const int n = seq.n();
  if (factor.n() != n) throw std::invalid_argument("factor and sequence differ in length");
  std::vector<int> f(static_cast<std::size_t>(n));
  const LabeledGraph host = complement(factor);
  for (int v = 1; v <= n; ++v) {
    const int need = seq[v] - factor.degree(v);
    if (need < 0 || need > host.degree(v)) return std::nullopt;
    f[static_cast<std::size_t>(v - 1)] = need;
  }
  auto extra = f_factor(host, f);
  if (!extra) return std::nullopt;
  LabeledGraph g = factor;
  for (const Edge& e : extra->edges()) g.add_edge(e.u, e.v);
  if (!has_degrees(g, seq.entries())) throw InvariantViolation("factor realization failed its audit");
  return g;
}

std::optional<LabeledGraph> hfactor_oracle(const DegreeSequence& seq, int h) {
  if (h < 1 || seq.n() % (h + 1) != 0)
    throw std::invalid_argument("h+1 must divide n for the canonical h-factor");
  if (seq.min() < h) return std::nullopt;
  return realize_factor(seq, canonical_h_factor(seq.n(), h).graph());
}

std::vector<std::vector<Edge>> near_one_factorization(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("near-1-factorization needs odd m >= 3");
  std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      // i + j = 2r (mod m) has the unique solution r = (i+j) * (m+1)/2 mod m.
      int r = static_cast<int>((static_cast<std::int64_t>(i + j) * ((m + 1) / 2)) % m);
      if (r == 0) r = m;
      classes[static_cast<std::size_t>(r - 1)].push_back(Edge{i, j});
    }
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  return classes;
}

std::vector<std::vector<Edge>> one_factorization(std::span<const int> vertices) {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (vs.size() < 2 || vs.size() % 2 != 0)
    throw std::invalid_argument("1-factorization needs an even vertex set");
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("repeated vertex");
  const int hub = vs.back();
  const int ring = static_cast<int>(vs.size()) - 1;
  auto at = [&](int i) { return vs[static_cast<std::size_t>(((i % ring) + ring) % ring)]; };
  std::vector<std::vector<Edge>> rounds;
  for (int r = 0; r < ring; ++r) {
    std::vector<Edge> pm{Edge::of(hub, at(r))};
    for (int i = 1; i <= (ring - 1) / 2; ++i) pm.push_back(Edge::of(at(r + i), at(r - i)));
    std::sort(pm.begin(), pm.end());
    rounds.push_back(std::move(pm));
  }
  return rounds;
}

LabeledGraph star_product(int n, std::span<const int> a, std::span<const int> b,
                          const PairList& m1, const PairList& m2) {
  require_odd_pair(a, b, n);
  missed_vertex(a, m1);
  missed_vertex(b, m2);
  LabeledGraph g(n);
  for (const auto& [side, m] : {std::pair{a, &m1}, std::pair{b, &m2}}) {
    std::set<Edge> drop;
    for (auto [x, y] : *m) drop.insert(Edge::of(x, y));
    for (std::size_t i = 0; i < side.size(); ++i)
      for (std::size_t j = i + 1; j < side.size(); ++j)
        if (!drop.count(Edge::of(side[i], side[j]))) g.add_edge(side[i], side[j]);
  }
  for (std::size_t j = 0; j < m1.size(); ++j) {
    g.add_edge(m1[j].first, m2[j].first);
    g.add_edge(m1[j].second, m2[j].second);
  }
  return g;
}

std::vector<std::vector<Edge>> star_product_factorization(std::span<const int> a,
                                                          std::span<const int> b,
                                                          const PairList& m1,
                                                          const PairList& m2) {
  const int n = std::max(*std::max_element(a.begin(), a.end()), *std::max_element(b.begin(), b.end()));
  require_odd_pair(a, b, n);
  const auto ca = classes_around(a, m1);
  const auto cb = classes_around(b, m2);
  std::vector<std::vector<Edge>> out;
  for (std::size_t j = 0; j < m1.size(); ++j) {
    for (auto pick : {&std::pair<int, int>::first, &std::pair<int, int>::second}) {
      const int x = m1[j].*pick, y = m2[j].*pick;
      std::vector<Edge> pm = class_missing(ca, x);
      const auto& other = class_missing(cb, y);
      pm.insert(pm.end(), other.begin(), other.end());
      pm.push_back(Edge::of(x, y));
      std::sort(pm.begin(), pm.end());
      out.push_back(std::move(pm));
    }
  }
  return out;
}

MergeResult merge_cliques(const LabeledGraph& g, std::span<const int> a, std::span<const int> b) {
  require_odd_pair(a, b, g.n());
  require_clique(g, a, "A");
  require_clique(g, b, "B");
  MergeResult result{g, {}, {}, 0};
  LabeledGraph& h = result.graph;
  std::vector<int> ra(a.begin(), a.end()), rb(b.begin(), b.end());
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  while (ra.size() >= 3) {
    const int* v = ra.data();
    const int* u = rb.data();
    bool done = false;
    // Cross matching of size two already present.
    for (int i1 = 0; i1 < 3 && !done; ++i1)
      for (int i2 = i1 + 1; i2 < 3 && !done; ++i2)
        for (int j1 = 0; j1 < 3 && !done; ++j1)
          for (int j2 = 0; j2 < 3 && !done; ++j2) {
            if (j1 == j2 || !h.has_edge(v[i1], u[j1]) || !h.has_edge(v[i2], u[j2])) continue;
            result.pairs_a.emplace_back(v[i1], v[i2]);
            result.pairs_b.emplace_back(u[j1], u[j2]);
            done = true;
          }
    for (int i1 = 0; i1 < 3 && !done; ++i1)
      for (int i2 = i1 + 1; i2 < 3 && !done; ++i2)
        for (int j1 = 0; j1 < 3 && !done; ++j1)
          for (int j2 = j1 + 1; j2 < 3 && !done; ++j2) {
            if (h.has_edge(v[i1], u[j1]) || h.has_edge(v[i1], u[j2]) ||
                h.has_edge(v[i2], u[j1]) || h.has_edge(v[i2], u[j2]))
              continue;
            h.remove_edge(v[i1], v[i2]);
            h.remove_edge(u[j1], u[j2]);
            h.add_edge(v[i1], u[j1]);
            h.add_edge(v[i2], u[j2]);
            ++result.switches;
            result.pairs_a.emplace_back(v[i1], v[i2]);
            result.pairs_b.emplace_back(u[j1], u[j2]);
            done = true;
          }
    if (!done) throw InvariantViolation("triangles admit neither a cross matching nor a switch");
    const auto [a1, a2] = result.pairs_a.back();
    const auto [b1, b2] = result.pairs_b.back();
    std::erase_if(ra, [&](int x) { return x == a1 || x == a2; });
    std::erase_if(rb, [&](int x) { return x == b1 || x == b2; });
  }
  const LabeledGraph product = star_product(g.n(), a, b, result.pairs_a, result.pairs_b);
  if (!contains_all(h, product.edges()) || h.degrees() != g.degrees())
    throw InvariantViolation("merged graph fails its star product audit");
  return result;
}

std::optional<DisjointMatchings> disjoint_pms(const DegreeSequence& seq, int h) {
  const int n = seq.n();
  if (h < 1) throw std::invalid_argument("regularity h must be >= 1");
  if (n % 2 != 0) throw std::invalid_argument("perfect matchings need even n");
  if (n % (h + 1) != 0) throw std::invalid_argument("h+1 must divide n");
  if (seq.min() < h) throw std::invalid_argument("every degree must be at least h");
  if (!doublestar_check(seq, h).verdict) return std::nullopt;
  auto realized = hfactor_oracle(seq, h);
  if (!realized) return std::nullopt;

  DisjointMatchings out;
  out.graph = std::move(*realized);
  std::vector<std::vector<Edge>> rounds(static_cast<std::size_t>(h));
  const auto blocks = canonical_blocks(n, h);
  auto append = [&](const std::vector<std::vector<Edge>>& parts) {
    for (std::size_t r = 0; r < parts.size(); ++r)
      rounds[r].insert(rounds[r].end(), parts[r].begin(), parts[r].end());
  };
  if (h % 2 == 1) {
    for (const auto& block : blocks) append(one_factorization(block));
  } else {
    for (std::size_t i = 0; i + 1 < blocks.size(); i += 2) {
      MergeResult merged = merge_cliques(out.graph, blocks[i], blocks[i + 1]);
      out.graph = std::move(merged.graph);
      append(star_product_factorization(blocks[i], blocks[i + 1], merged.pairs_a, merged.pairs_b));
    }
  }
  std::set<Edge> used;
  for (auto& r : rounds) {
    Matching m(n, r);
    if (!m.is_perfect() || !contains_matching(out.graph, m))
      throw InvariantViolation("factorization round is not a perfect matching of the realization");
    for (const Edge& e : m.edges())
      if (!used.insert(e).second) throw InvariantViolation("factorization rounds share an edge");
    out.matchings.push_back(std::move(m));
  }
  if (!has_degrees(out.graph, seq.entries())) throw InvariantViolation("realization degree audit failed");
  return out;
}

std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& seq, std::size_t max_results) {
  const int n = seq.n();
  std::vector<int> residual(seq.entries().begin(), seq.entries().end());
  std::vector<LabeledGraph> out;
  LabeledGraph g(n);

  auto rest_graphic = [&](int from) {
    std::vector<int> rest(residual.begin() + from, residual.end());
    std::sort(rest.rbegin(), rest.rend());
    return is_graphic(rest);
  };
  // Chooses the remaining neighbours of vertex v among labels >= next.
  std::function<void(int, int, int)> choose = [&](int v, int next, int need) {
    if (need == 0) {
      if (v < n) {
        if (rest_graphic(v)) choose(v + 1, v + 2, residual[static_cast<std::size_t>(v)]);
        return;
      }
      if (out.size() >= max_results) throw ResourceLimit("realization enumeration limit reached");
      out.push_back(g);
      return;
    }
    int available = 0;
    for (int w = next; w <= n; ++w) available += residual[static_cast<std::size_t>(w - 1)] > 0;
    if (available < need) return;
    for (int w = next; w <= n; ++w) {
      int& rw = residual[static_cast<std::size_t>(w - 1)];
      if (rw == 0) continue;
      --rw;
      residual[static_cast<std::size_t>(v - 1)]--;
      g.add_edge(v, w);
      choose(v, w + 1, need - 1);
      g.remove_edge(v, w);
      residual[static_cast<std::size_t>(v - 1)]++;
      ++rw;
    }
  };
  choose(1, 2, residual[0]);
  return out;
}

std::vector<SpanningFactor> enumerate_two_factors(const LabeledGraph& g, std::size_t max_results) {
  const int n = g.n();
  std::vector<SpanningFactor> out;
  if (n < 3) return out;
  std::vector<char> covered(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> path;
  LabeledGraph f(n);

  std::function<void()> cover_next;
  // Extends the open path; the cycle's smallest vertex is path.front() and it
  // may only close when the last vertex exceeds path[1], fixing orientation.
  std::function<void()> extend = [&]() {
    const int start = path.front(), last = path.back();
    if (path.size() >= 3 && last > path[1] && g.has_edge(last, start)) {
      f.add_edge(last, start);
      cover_next();
      f.remove_edge(last, start);
    }
    for (int w = start + 1; w <= n; ++w) {
      if (covered[static_cast<std::size_t>(w)] || !g.has_edge(last, w)) continue;
      covered[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      f.add_edge(last, w);
      extend();
      f.remove_edge(last, w);
      path.pop_back();
      covered[static_cast<std::size_t>(w)] = 0;
    }
  };
  cover_next = [&]() {
    int s = 1;
    while (s <= n && covered[static_cast<std::size_t>(s)]) ++s;
    if (s > n) {
      if (out.size() >= max_results) throw ResourceLimit("2-factor enumeration limit reached");
      out.emplace_back(2, f);
      return;
    }
    std::vector<int> saved;
    saved.swap(path);
    covered[static_cast<std::size_t>(s)] = 1;
    path.push_back(s);
    extend();
    covered[static_cast<std::size_t>(s)] = 0;
    path.swap(saved);
  };
  cover_next();
  return out;
}

std::vector<std::vector<int>> factor_components(const LabeledGraph& g) {
  const int n = g.n();
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)] || g.degree(s) == 0) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    const bool cycle = std::all_of(comp.begin(), comp.end(), [&](int v) { return g.degree(v) == 2; });
    if (!cycle) {
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
      continue;
    }
    std::vector<int> walk{s};
    int prev = s, cur = g.neighbors(s).back();
    while (cur != s) {
      walk.push_back(cur);
      const auto nb = g.neighbors(cur);
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(walk));
  }
  return out;
}

LabeledGraph cycles_graph(int n, const std::vector<std::vector<int>>& cycles) {
  LabeledGraph g(n);
  for (const auto& c : cycles) {
    if (c.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    for (std::size_t i = 0; i < c.size(); ++i) g.add_edge(c[i], c[(i + 1) % c.size()]);
  }
  return g;
}

ConjectureScan conjecture_scan(int n, int h) {
  if (h < 1 || n % (h + 1) != 0 || n > 12)
    throw std::invalid_argument("scan needs (h+1) | n and n <= 12");
  ConjectureScan scan;
  scan.n = n;
  scan.h = h;
  for (const DegreeSequence& seq : all_sequences(n)) {
    ++scan.sequences;
    ScanEntry entry;
    entry.sequence.assign(seq.entries().begin(), seq.entries().end());
    entry.doublestar = doublestar_check(seq, h).verdict;
    entry.oracle = hfactor_oracle(seq, h).has_value();
    if (entry.oracle && !entry.doublestar) scan.forward_violations.push_back(entry);
    if (entry.doublestar && !entry.oracle) scan.reverse_mismatches.push_back(entry);
  }
  return scan;
}

SupergraphScan supergraph_scan(int n, int h) {
  const SpanningFactor factor = canonical_h_factor(n, h);
  std::vector<Edge> free_edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!factor.graph().has_edge(u, v)) free_edges.push_back(Edge{u, v});
  if (free_edges.size() > 30) throw std::invalid_argument("too many free edges for an exhaustive scan");

  SupergraphScan scan;
  std::vector<int> deg(static_cast<std::size_t>(n), h);
  std::unordered_set<std::uint64_t> checked;
  auto visit = [&]() {
    ++scan.graphs;
    if (!is_weakly_decreasing(deg)) return;
    ++scan.decreasing;
    std::uint64_t key = 0;
    for (int d : deg) key = key * 32 + static_cast<std::uint64_t>(d);
    if (!checked.insert(key).second) return;
    if (!doublestar_check(DegreeSequence(deg), h).verdict) scan.violations.push_back(deg);
  };
  // Reflected Gray code: step i flips the edge indexed by its lowest set bit.
  std::vector<char> present(free_edges.size(), 0);
  visit();
  const std::uint64_t total = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const Edge& e = free_edges[bit];
    const int delta = present[bit] ? -1 : 1;
    present[bit] = !present[bit];
    deg[static_cast<std::size_t>(e.u - 1)] += delta;
    deg[static_cast<std::size_t>(e.v - 1)] += delta;
    visit();
  }
  scan.distinct_sequences = checked.size();
  return scan;
}

}  // namespace degseq
