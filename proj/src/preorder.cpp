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

#include "degseq/preorder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <thread>

#include "degseq/graphic.hpp"
#include "degseq/switches.hpp"

namespace degseq {
namespace {

void extend_sequences(int n, int max_value, std::vector<int>& current,
                      std::vector<DegreeSequence>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.emplace_back(current);
    return;
  }
  for (int v = max_value; v >= 1; --v) {
    current.push_back(v);
    extend_sequences(n, v, current, out);
    current.pop_back();
  }
}

}  // namespace

int PreorderTable::index_of(const Matching& m) const {
  auto it = std::find(matchings.begin(), matchings.end(), m);
  return it == matchings.end() ? -1 : static_cast<int>(it - matchings.begin());
}

std::vector<DegreeSequence> all_sequences(int n) {
  if (n < 2) throw std::invalid_argument("sequences need n >= 2");
  std::vector<DegreeSequence> out;
  std::vector<int> current;
  extend_sequences(n, n - 1, current, out);
  return out;
}

PreorderTable build_preorder(int n, unsigned threads) {
  if (n < 2 || n > kPreorderMaxN || n % 2 != 0)
    throw std::invalid_argument("preorder supports n in {2,4,6,8}, got " + std::to_string(n));
  PreorderTable table;
  table.n = n;
  table.matchings = all_perfect_matchings(n);
  for (DegreeSequence& seq : all_sequences(n))
    if (lovasz_pm_check(seq)) table.sequences.push_back(std::move(seq));

  const std::size_t rows = table.sequences.size();
  const std::size_t cols = table.matchings.size();
  table.realizable.assign(rows, std::vector<char>(cols, 0));
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s)
      for (std::size_t m = 0; m < cols; ++m)
        table.realizable[s][m] =
            realize_matching_oracle(table.sequences[s], table.matchings[m]).has_value();
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows, 1)));
  if (threads <= 1) {
    fill(0, rows);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (rows + threads - 1) / threads;
    for (std::size_t begin = 0; begin < rows; begin += chunk)
      workers.emplace_back(fill, begin, std::min(rows, begin + chunk));
    for (auto& w : workers) w.join();
  }

  table.leq.assign(cols, std::vector<char>(cols, 0));
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      bool contained = true;
      for (std::size_t s = 0; s < rows && contained; ++s)
        if (table.realizable[s][b] && !table.realizable[s][a]) contained = false;
      table.leq[a][b] = contained;
    }
  }
  return table;
}

HasseDiagram hasse_diagram(const PreorderTable& table) {
  const int count = static_cast<int>(table.matchings.size());
  HasseDiagram out;
  std::vector<int> class_of(static_cast<std::size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    for (int c = 0; c < static_cast<int>(out.classes.size()); ++c) {
      const int first = out.classes[static_cast<std::size_t>(c)].front();
      if (table.is_leq(i, first) && table.is_leq(first, i)) {
        class_of[static_cast<std::size_t>(i)] = c;
        break;
      }
    }
    if (class_of[static_cast<std::size_t>(i)] < 0) {
      class_of[static_cast<std::size_t>(i)] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])].push_back(i);
  }
  const int classes = static_cast<int>(out.classes.size());
  auto below = [&](int a, int b) {
    const int x = out.classes[static_cast<std::size_t>(a)].front();
    const int y = out.classes[static_cast<std::size_t>(b)].front();
    return table.is_leq(x, y) && !table.is_leq(y, x);
  };
  for (int a = 0; a < classes; ++a) {
    for (int b = 0; b < classes; ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < classes && covered; ++c)
        if (below(a, c) && below(c, b)) covered = false;
      if (covered) out.covers.emplace_back(a, b);
    }
  }
  return out;
}

std::string hasse_dot(const PreorderTable& table) {
  const HasseDiagram diagram = hasse_diagram(table);
  std::ostringstream out;
  out << "digraph preorder {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < diagram.classes.size(); ++c) {
    out << "  c" << c << " [label=\"";
    for (std::size_t i = 0; i < diagram.classes[c].size(); ++i) {
      if (i) out << "\\n";
      out << to_string(table.matchings[static_cast<std::size_t>(diagram.classes[c][i])]);
    }
    out << "\"];\n";
  }
  for (auto [a, b] : diagram.covers) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
  return out.str();
}

ConjectureReport check_conjectures(const PreorderTable& table) {
  const int count = static_cast<int>(table.matchings.size());
  std::map<Matching, int> index;
  for (int i = 0; i < count; ++i) index.emplace(table.matchings[static_cast<std::size_t>(i)], i);

  // down[i]: matchings that are a switch of matchings[i].
  std::vector<std::vector<int>> down(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    for (const auto& [lower, move] : switches_of(table.matchings[static_cast<std::size_t>(i)]))
      down[static_cast<std::size_t>(i)].push_back(index.at(lower));

  ConjectureReport report;
  for (int upper = 0; upper < count; ++upper) {
    std::vector<char> reach(static_cast<std::size_t>(count), 0);
    std::deque<int> queue{upper};
    reach[static_cast<std::size_t>(upper)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : down[static_cast<std::size_t>(v)]) {
        if (!reach[static_cast<std::size_t>(w)]) {
          reach[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    for (int lower = 0; lower < count; ++lower) {
      if (lower == upper || !table.is_leq(lower, upper)) continue;
      if (!reach[static_cast<std::size_t>(lower)])
        report.switch_path_violations.emplace_back(lower, upper);
    }
  }
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const bool ab = table.is_leq(a, b), ba = table.is_leq(b, a);
      if (ab && ba) report.antisymmetry_violations.emplace_back(a, b);
      if (ab || ba)
        ++report.comparable_pairs;
      else
        ++report.incomparable_pairs;
    }
  }
  return report;
}

}  // namespace degseq
