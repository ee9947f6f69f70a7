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

#ifndef DEGSEQ_BLOSSOM_HPP_
#define DEGSEQ_BLOSSOM_HPP_

#include <vector>

namespace degseq {

// Maximum-cardinality matching in a general graph with Edmonds' blossom
// contraction. Vertices are 0-based here; adjacency lists must be symmetric.
//
// Returns mate[v] (or -1 for exposed vertices). With stop_when_exposed set,
// the search gives up as soon as some vertex provably stays exposed; the
// result is then only useful as a "no perfect matching" verdict.
//
// All scratch state lives in the call, so concurrent calls are safe.
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adj,
                                  bool stop_when_exposed = false);

}  // namespace degseq

#endif  // DEGSEQ_BLOSSOM_HPP_
