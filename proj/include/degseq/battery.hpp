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

#ifndef DEGSEQ_BATTERY_HPP_
#define DEGSEQ_BATTERY_HPP_

#include <cstdint>
#include <string>
#include <vector>

// The end-to-end verification battery: fourteen exhaustive or randomized
// checks of the library's guarantees at desk scale.
namespace degseq {

inline constexpr int kBatterySize = 14;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs criterion id in [1, kBatterySize]. Internal exceptions are caught and
// reported as a failure with the exception text in detail.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

std::vector<CriterionResult> run_battery(std::uint64_t seed = kDefaultSeed);

// "[PASS] 3 preorder on 4 vertices: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace degseq

#endif  // DEGSEQ_BATTERY_HPP_
