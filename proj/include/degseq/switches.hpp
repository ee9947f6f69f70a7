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

#ifndef DEGSEQ_SWITCHES_HPP_
#define DEGSEQ_SWITCHES_HPP_

#include <optional>
#include <vector>

#include "degseq/core.hpp"

namespace degseq {

// Type of the switch taking upper to lower, if lower is a switch of upper.
// Throws std::invalid_argument when the vertex counts differ.
std::optional<SwitchKind> classify_switch(const Matching& upper, const Matching& lower);

// Applies move to the upper matching (removing move.removed(), adding
// move.added()), or the reverse. Throws std::invalid_argument if the edges
// to remove are not in the matching.
Matching apply_down(const Matching& upper, const SwitchMove& move);
Matching apply_up(const Matching& lower, const SwitchMove& move);

// Every matching that is a switch of m, with the move producing it, in
// lexicographic order of the edge pair.
std::vector<std::pair<Matching, SwitchMove>> switches_of(const Matching& m);

enum class SwitchDirection { kDown, kUp };

struct SwitchStep {
  Matching next;
  // For kDown, next is a switch of the input; for kUp, the input is a switch
  // of next. Either way the move is stated from upper to lower.
  SwitchMove move;
};

// One step towards M- (kDown) or M+ (kUp). Down scans the edge pairs in
// lexicographic order for a disjoint pair (type 3) and only then for a
// crossing pair (type 2). Up scans for a nested pair (reverse type 3) and only
// then for a crossing pair (reverse type 1). Returns nullopt at M- resp. M+.
// Throws std::invalid_argument for a non-perfect matching.
std::optional<SwitchStep> switch_step(const Matching& m, SwitchDirection direction);

struct SwitchPath {
  // In walking order, starting at the input matching.
  std::vector<SwitchMove> moves;
  Matching end;
  // Set when the walk took more than n^2 steps. Not an error: termination is
  // guaranteed by the potential phi, the n^2 figure is only an empirical guard.
  bool exceeded_guard = false;
};

// Iterates switch_step until it stops. Throws InvariantViolation if the walk
// ends anywhere but the requested canonical matching.
SwitchPath switch_path(const Matching& m, Canonical target);

// Given g containing upper (whose labelled degree vector is weakly
// decreasing), returns h with the same labelled degrees containing
// apply_down(upper, move). Throws std::invalid_argument on a violated
// precondition and InvariantViolation if the exchange vertex q cannot be
// found.
LabeledGraph lift_switch(const LabeledGraph& g, const Matching& upper, const SwitchMove& move);

// Realization of seq containing m: realize M+ constructively, then lift the
// switch path from M+ down to m one switch at a time. Throws
// std::invalid_argument if seq fails the star check or m is not a perfect
// matching on [n].
LabeledGraph realize_matching_switchwise(const DegreeSequence& seq, const Matching& m,
                                         SwitchPath* path = nullptr);

// Independent route: m plus an f-factor of K_n - m with f = d - 1.
// Throws std::invalid_argument if m is not a perfect matching on [n].
std::optional<LabeledGraph> realize_matching_oracle(const DegreeSequence& seq, const Matching& m);

// Realizes M- whenever any perfect matching is realizable.
std::optional<LabeledGraph> realize_mminus(const DegreeSequence& seq);

}  // namespace degseq

#endif  // DEGSEQ_SWITCHES_HPP_
