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

// Floating-point oracle for L(E,1) and the real period. Used only to pin
// the period scalar and by acceptance checks; exact code paths never call it.

#include <cstdint>
#include <optional>

#include "betti/curve.hpp"

namespace betti::oracle {

struct LValue {
  double value = 0.0;
  // Bound on the discarded tail of the rapidly convergent series.
  double tail_bound = 0.0;
  std::int64_t terms = 0;
  int root_number = 0;
};

/// L(E,1) = (1 + w) sum_{n <= B} (a_n / n) exp(-2 pi n / sqrt(N)), w the
/// root number. Throws PreconditionError when w is unknown and not given.
LValue lvalue_at_one(const CurveData& curve,
                     std::optional<int> root_number = std::nullopt);

/// Real period Omega^+ = integral of |omega| over E(R) for the catalog
/// model, via the arithmetic-geometric mean.
double real_period(const CurveData& curve);

}  // namespace betti::oracle
