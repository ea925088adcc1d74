// Copyright 2026 The Betti-ES Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Named identity suites behind `verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "betti/curve.hpp"
#include "betti/report.hpp"

namespace betti {

struct SuiteOptions {
  std::vector<std::string> curves = {"11a1", "37a1"};
  std::int64_t max_ml = 150;   // norm-relations: M * l bound
  std::int64_t max_l = 100;    // kolyvagin-identity
  std::int64_t max_conductor = 13;  // gauss
  int k = 6;                   // projectivity / interpolation precision
  int n_max = 3;               // top layer compared
  int char_layers = 2;         // interpolation: conductors p^n, n <= this
  std::int64_t level = 5;      // siegel-c
  std::int64_t prec = 0;       // 0: suite default
};

const std::vector<std::string>& suite_names();

// Appends checks and outputs to rep. Throws PreconditionError on an unknown
// suite or curve.
void run_suite(const std::string& name, const std::vector<CurveData>& catalog,
               const SuiteOptions& opt, RunReport& rep);

}  // namespace betti
