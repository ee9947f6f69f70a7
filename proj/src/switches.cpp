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

#include "degseq/switches.hpp"

#include <algorithm>
#include <array>

#include "degseq/graphic.hpp"
#include "degseq/mplus.hpp"

namespace degseq {
namespace {

// Which of the three pairings of w<x<y<z the edges a, b form:
// 1 = {wx, yz} (disjoint), 2 = {wy, xz} (crossing), 3 = {wz, xy} (nested).
int pairing(Edge a, Edge b) {
  if (b < a) std::swap(a, b);
  if (a.v < b.u) return 1;
  if (a.v < b.v) return 2;
  return 3;
}

SwitchMove disjoint_move(const Edge& a, const Edge& b, SwitchKind kind) {
  // a=(w,x), b=(y,z)
  return {a.u, a.v, b.u, b.v, kind};
}

SwitchMove crossing_move(const Edge& a, const Edge& b, SwitchKind kind) {
  // a=(w,y), b=(x,z)
  return {a.u, b.u, a.v, b.v, kind};
}

SwitchMove nested_move(const Edge& a, const Edge& b, SwitchKind kind) {
  // a=(w,z), b=(x,y)
  return {a.u, b.u, b.v, a.v, kind};
}

Matching exchange(const Matching& m, std::pair<Edge, Edge> out, std::pair<Edge, Edge> in) {
  if (!m.contains(out.first) || !m.contains(out.second))
    throw std::invalid_argument("switch edges " + to_string(out.first) + "," +
                                to_string(out.second) + " not in matching " + to_string(m));
  std::vector<Edge> edges;
  edges.reserve(m.size());
  for (const Edge& e : m.edges())
    if (e != out.first && e != out.second) edges.push_back(e);
  edges.push_back(in.first);
  edges.push_back(in.second);
  return Matching(m.n(), std::move(edges));
}

void require_perfect(const Matching& m) {
  if (!m.is_perfect())
    throw std::invalid_argument("matching " + to_string(m) + " is not perfect on [" +
                                std::to_string(m.n()) + "]");
}

// Smallest q outside `excluded` with adjacent(anchor, q) and !adjacent(avoid, q).
int find_exchange_vertex(const LabeledGraph& g, int anchor, int avoid,
                         std::array<int, 2> excluded) {
  for (int q = 1; q <= g.n(); ++q) {
    if (q == excluded[0] || q == excluded[1] || q == anchor || q == avoid) continue;
    if (g.has_edge(anchor, q) && !g.has_edge(avoid, q)) return q;
  }
  throw InvariantViolation("no exchange vertex q adjacent to " + std::to_string(anchor) +
                           " and not to " + std::to_string(avoid));
}

// Lift of a single type 1 or type 2 switch.
LabeledGraph lift_basic(const LabeledGraph& g, const SwitchMove& move) {
  const auto [r1, r2] = move.removed();
  const auto [a1, a2] = move.added();
  const bool has1 = g.has_edge(a1.u, a1.v);
  const bool has2 = g.has_edge(a2.u, a2.v);
  if (has1 && has2) return g;
  LabeledGraph h = g;
  if (!has1 && !has2) {
    h.remove_edge(r1.u, r1.v);
    h.remove_edge(r2.u, r2.v);
    h.add_edge(a1.u, a1.v);
    h.add_edge(a2.u, a2.v);
    return h;
  }
  const int w = move.w, x = move.x, y = move.y, z = move.z;
  if (move.kind == SwitchKind::kType1) {
    if (has1) {
      // wy present, xz missing: d_x >= d_y while z ~ y, z !~ x.
      const int q = find_exchange_vertex(g, x, y, {y, z});
      h.remove_edge(x, q);
      h.remove_edge(y, z);
      h.add_edge(x, z);
      h.add_edge(y, q);
    } else {
      // xz present, wy missing: d_w >= d_z while y ~ z, y !~ w.
      const int q = find_exchange_vertex(g, w, z, {y, z});
      h.remove_edge(w, q);
      h.remove_edge(y, z);
      h.add_edge(w, y);
      h.add_edge(z, q);
    }
  } else {
    if (has1) {
      // wz present, xy missing: d_y >= d_z while x ~ z, x !~ y.
      const int q = find_exchange_vertex(g, y, z, {x, z});
      h.remove_edge(y, q);
      h.remove_edge(x, z);
      h.add_edge(x, y);
      h.add_edge(z, q);
    } else {
      // xy present, wz missing: d_w >= d_x while z ~ x, z !~ w.
      const int q = find_exchange_vertex(g, w, x, {x, z});
      h.remove_edge(w, q);
      h.remove_edge(x, z);
      h.add_edge(w, z);
      h.add_edge(x, q);
    }
  }
  return h;
}

}  // namespace

std::optional<SwitchKind> classify_switch(const Matching& upper, const Matching& lower) {
  if (upper.n() != lower.n())
    throw std::invalid_argument("matchings on different vertex counts");
  std::vector<Edge> out, in;
  std::set_difference(upper.edges().begin(), upper.edges().end(), lower.edges().begin(),
                      lower.edges().end(), std::back_inserter(out));
  std::set_difference(lower.edges().begin(), lower.edges().end(), upper.edges().begin(),
                      upper.edges().end(), std::back_inserter(in));
  if (out.size() != 2 || in.size() != 2) return std::nullopt;
  std::array<int, 4> vout{out[0].u, out[0].v, out[1].u, out[1].v};
  std::array<int, 4> vin{in[0].u, in[0].v, in[1].u, in[1].v};
  std::sort(vout.begin(), vout.end());
  std::sort(vin.begin(), vin.end());
  if (vout != vin) return std::nullopt;
  const int from = pairing(out[0], out[1]);
  const int to = pairing(in[0], in[1]);
  if (from == 1 && to == 2) return SwitchKind::kType1;
  if (from == 2 && to == 3) return SwitchKind::kType2;
  if (from == 1 && to == 3) return SwitchKind::kType3;
  return std::nullopt;
}

Matching apply_down(const Matching& upper, const SwitchMove& move) {
  return exchange(upper, move.removed(), move.added());
}

Matching apply_up(const Matching& lower, const SwitchMove& move) {
  return exchange(lower, move.added(), move.removed());
}

std::vector<std::pair<Matching, SwitchMove>> switches_of(const Matching& m) {
  std::vector<std::pair<Matching, SwitchMove>> out;
  const auto& e = m.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      std::vector<SwitchMove> moves;
      switch (pairing(e[i], e[j])) {
        case 1:
          moves.push_back(disjoint_move(e[i], e[j], SwitchKind::kType1));
          moves.push_back(disjoint_move(e[i], e[j], SwitchKind::kType3));
          break;
        case 2:
          moves.push_back(crossing_move(e[i], e[j], SwitchKind::kType2));
          break;
        default:
          break;
      }
      for (const SwitchMove& mv : moves) out.emplace_back(apply_down(m, mv), mv);
    }
  }
  return out;
}

std::optional<SwitchStep> switch_step(const Matching& m, SwitchDirection direction) {
  require_perfect(m);
  const auto& e = m.edges();
  const int first_pass = direction == SwitchDirection::kDown ? 1 : 3;
  for (int wanted : {first_pass, 2}) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (pairing(e[i], e[j]) != wanted) continue;
        if (direction == SwitchDirection::kDown) {
          SwitchMove mv = wanted == 1 ? disjoint_move(e[i], e[j], SwitchKind::kType3)
                                      : crossing_move(e[i], e[j], SwitchKind::kType2);
          return SwitchStep{apply_down(m, mv), mv};
        }
        SwitchMove mv = wanted == 3 ? nested_move(e[i], e[j], SwitchKind::kType3)
                                    : crossing_move(e[i], e[j], SwitchKind::kType1);
        return SwitchStep{apply_up(m, mv), mv};
      }
    }
  }
  return std::nullopt;
}

SwitchPath switch_path(const Matching& m, Canonical target) {
  require_perfect(m);
  const SwitchDirection direction =
      target == Canonical::kPlus ? SwitchDirection::kUp : SwitchDirection::kDown;
  const std::size_t guard = static_cast<std::size_t>(m.n()) * static_cast<std::size_t>(m.n());
  SwitchPath path;
  path.end = m;
  while (auto step = switch_step(path.end, direction)) {
    path.moves.push_back(step->move);
    path.end = std::move(step->next);
    if (path.moves.size() > guard) path.exceeded_guard = true;
  }
  if (path.end != canonical_matching(m.n(), target))
    throw InvariantViolation("switch walk stopped at " + to_string(path.end));
  return path;
}

LabeledGraph lift_switch(const LabeledGraph& g, const Matching& upper, const SwitchMove& move) {
  if (g.n() != upper.n()) throw std::invalid_argument("graph and matching sizes differ");
  if (!contains_matching(g, upper))
    throw std::invalid_argument("graph does not contain matching " + to_string(upper));
  if (!is_weakly_decreasing(g.degrees()))
    throw std::invalid_argument("labelled degree vector is not weakly decreasing");
  if (!(move.w < move.x && move.x < move.y && move.y < move.z))
    throw std::invalid_argument("switch vertices must satisfy w < x < y < z");
  const Matching lower = apply_down(upper, move);

  LabeledGraph h;
  if (move.kind == SwitchKind::kType3) {
    // Type 3 is a type 1 switch followed by a type 2 switch.
    const SwitchMove first{move.w, move.x, move.y, move.z, SwitchKind::kType1};
    const SwitchMove second{move.w, move.x, move.y, move.z, SwitchKind::kType2};
    h = lift_basic(lift_basic(g, first), second);
  } else {
    h = lift_basic(g, move);
  }
  for (const Edge& e : g.edges())
    if (!h.has_edge(e.u, e.v) && lower.contains(e))
      throw InvariantViolation("lift removed edge " + to_string(e) + " of the target matching");
  if (h.degrees() != g.degrees()) throw InvariantViolation("lift changed the degree vector");
  if (!contains_matching(h, lower)) throw InvariantViolation("lift misses the target matching");
  return h;
}

LabeledGraph realize_matching_switchwise(const DegreeSequence& seq, const Matching& m,
                                         SwitchPath* path_out) {
  if (m.n() != seq.n()) throw std::invalid_argument("matching and sequence sizes differ");
  require_perfect(m);
  LabeledGraph g = realize_mplus(seq);
  SwitchPath path = switch_path(m, Canonical::kPlus);
  Matching current = canonical_matching(seq.n(), Canonical::kPlus);
  for (auto it = path.moves.rbegin(); it != path.moves.rend(); ++it) {
    g = lift_switch(g, current, *it);
    current = apply_down(current, *it);
  }
  if (current != m) throw InvariantViolation("switch walk did not return to the target");
  if (path_out) *path_out = std::move(path);
  return g;
}

std::optional<LabeledGraph> realize_matching_oracle(const DegreeSequence& seq, const Matching& m) {
  if (m.n() != seq.n()) throw std::invalid_argument("matching and sequence sizes differ");
  require_perfect(m);
  const LabeledGraph host = complete_minus(seq.n(), m.edges());
  std::vector<int> f(seq.entries().begin(), seq.entries().end());
  for (int& x : f) --x;
  auto rest = f_factor(host, f);
  if (!rest) return std::nullopt;
  for (const Edge& e : m.edges()) rest->add_edge(e.u, e.v);
  return rest;
}

std::optional<LabeledGraph> realize_mminus(const DegreeSequence& seq) {
  if (!lovasz_pm_check(seq)) return std::nullopt;
  auto g = realize_matching_oracle(seq, canonical_matching(seq.n(), Canonical::kMinus));
  if (!g) throw InvariantViolation("perfect matching realizable but M- is not");
  return g;
}

}  // namespace degseq
