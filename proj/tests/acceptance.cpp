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

// Runs the fourteen end-to-end criteria, one pass/fail line each. An
// optional argument replaces the default seed of the randomized criteria.

#include <cstdint>
#include <iostream>
#include <string>

#include "degseq/battery.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = degseq::kDefaultSeed;
  if (argc > 1) {
    try {
      seed = std::stoull(argv[1]);
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [SEED]\n";
      return 2;
    }
  }
  int failed = 0;
  for (int id = 1; id <= degseq::kBatterySize; ++id) {
    const degseq::CriterionResult r = degseq::run_criterion(id, seed);
    std::cout << degseq::format_result(r) << " (" << r.seconds << " s)" << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (degseq::kBatterySize - failed) << "/" << degseq::kBatterySize << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
