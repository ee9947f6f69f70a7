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

#include "degseq/blossom.hpp"

#include <numeric>

namespace degseq {
namespace {

class BlossomSearch {
 public:
  explicit BlossomSearch(const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        mate_(adj.size(), -1),
        parent_(adj.size(), -1),
        base_(adj.size()),
        in_tree_(adj.size(), 0),
        in_blossom_(adj.size(), 0),
        lca_stamp_(adj.size(), 0),
        queue_(adj.size()) {}

  std::vector<int> run(bool stop_when_exposed) {
    greedy_start();
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int end = grow(root);
      if (end == -1) {
        // An exposed vertex with no augmenting path stays exposed for good.
        if (stop_when_exposed) break;
        continue;
      }
      augment(end);
    }
    return mate_;
  }

 private:
  void greedy_start() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int to : adj_[v]) {
        if (mate_[to] == -1 && to != v) {
          mate_[v] = to;
          mate_[to] = v;
          break;
        }
      }
    }
  }

  int lca(int a, int b) {
    ++stamp_;
    while (true) {
      a = base_[a];
      lca_stamp_[a] = stamp_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_stamp_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Alternating-tree search from root; returns an exposed endpoint or -1.
  int grow(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    int head = 0, tail = 0;
    queue_[tail++] = root;
    in_tree_[root] = 1;
    while (head < tail) {
      int v = queue_[head++];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue_[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_tree_[mate_[to]] = 1;
          queue_[tail++] = mate_[to];
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent_[v];
      int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> in_tree_, in_blossom_;
  std::vector<unsigned> lca_stamp_;
  unsigned stamp_ = 0;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adj,
                                  bool stop_when_exposed) {
  return BlossomSearch(adj).run(stop_when_exposed);
}

}  // namespace degseq
