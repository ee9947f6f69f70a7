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

#ifndef DEGSEQ_SRC_INEQUALITY_HPP_
#define DEGSEQ_SRC_INEQUALITY_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace degseq::detail {

// Prefix sums over a weakly decreasing sequence, 1-based: at(i) = d_1+...+d_i.
class DecreasingSums {
 public:
  explicit DecreasingSums(std::span<const int> d) : d_(d), prefix_(d.size() + 1, 0) {
    for (std::size_t i = 0; i < d.size(); ++i) prefix_[i + 1] = prefix_[i] + d[i];
  }

  int n() const { return static_cast<int>(d_.size()); }
  std::int64_t head(int k) const { return prefix_[static_cast<std::size_t>(k)]; }
  std::int64_t total() const { return prefix_.back(); }

  // Sum over i in [from, to] of min(d_i - shift, cap). Empty ranges give 0.
  // Terms with d_i - shift >= cap form a prefix of the range because d is
  // weakly decreasing, so one binary search splits the range.
  std::int64_t sum_min(int from, int to, int shift, std::int64_t cap) const {
    if (to > n()) to = n();
    if (from < 1) from = 1;
    if (from > to) return 0;
    int lo = from, hi = to + 1;  // first index with d_i - shift < cap
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (d_[static_cast<std::size_t>(mid - 1)] - shift >= cap)
        lo = mid + 1;
      else
        hi = mid;
    }
    const std::int64_t capped = cap * (lo - from);
    const std::int64_t tail = prefix_[static_cast<std::size_t>(to)] -
                              prefix_[static_cast<std::size_t>(lo - 1)] -
                              static_cast<std::int64_t>(shift) * (to - lo + 1);
    return capped + tail;
  }

 private:
  std::span<const int> d_;
  std::vector<std::int64_t> prefix_;
};

// Right-hand sides of the three inequality families at index k.
inline std::int64_t eg_rhs(const DecreasingSums& s, int k) {
  return std::int64_t{k} * (k - 1) + s.sum_min(k + 1, s.n(), 0, k);
}

inline std::int64_t star_rhs(const DecreasingSums& s, int k) {
  const std::int64_t base = std::int64_t{k} * (k - 1);
  if (k % 2 == 0) return base + s.sum_min(k + 1, s.n(), 1, k);
  return base + s.sum_min(k + 1, k + 1, 0, k) + s.sum_min(k + 2, s.n(), 1, k);
}

inline std::int64_t doublestar_rhs(const DecreasingSums& s, int k, int h) {
  const int slot = k % (h + 1);
  const int split = k + 1 + h - slot;
  return std::int64_t{k} * (k - 1) + s.sum_min(k + 1, split, h - slot, k) +
         s.sum_min(split + 1, s.n(), h, k);
}

}  // namespace degseq::detail

#endif  // DEGSEQ_SRC_INEQUALITY_HPP_
