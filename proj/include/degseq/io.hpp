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

#ifndef DEGSEQ_IO_HPP_
#define DEGSEQ_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degseq/core.hpp"
#include "degseq/graphic.hpp"
#include "degseq/hfactor.hpp"
#include "degseq/packing.hpp"
#include "degseq/preorder.hpp"

// Text and JSON encodings. Every parser throws std::invalid_argument with a
// message naming the offending token.
namespace degseq {

// Integers separated by commas and/or whitespace, e.g. "3,2,2,1" or "3 2 2 1".
std::vector<int> parse_ints(std::string_view text);
DegreeSequence parse_sequence(std::string_view text);

// "1-2,3-4" (whitespace also separates). n = 0 takes the largest label.
Matching parse_matching(std::string_view text, int n = 0);

// Edge-list text: a header line "n m", then one "u v" line per edge, u < v,
// in lexicographic order. Blank lines and lines starting with '#' are skipped
// when parsing.
std::string format_edge_list(const LabeledGraph& g);
LabeledGraph parse_edge_list(std::string_view text);

// Edges on one line as "1-2,1-3,...".
std::string format_edges_inline(const LabeledGraph& g);

// One component per line, vertices separated by spaces (see
// factor_components for the order).
std::string format_components(const LabeledGraph& g);

nlohmann::json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Matching& m);

nlohmann::json to_json(const CheckReport& report);
CheckReport check_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PreorderTable& table);
nlohmann::json to_json(const ConjectureReport& report, const PreorderTable& table);
nlohmann::json to_json(const ConjectureScan& scan);

nlohmann::json packing_json(const DegreeSequence& pi1, const DegreeSequence& pi2,
                            const std::optional<Packing>& result);

}  // namespace degseq

#endif  // DEGSEQ_IO_HPP_
