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

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "betti/arith.hpp"

namespace betti {

// Default ceiling for naive point counting.
inline constexpr std::int64_t kDefaultPointCountBound = 20000;

// Monotone memo of a_l values. Concurrent fills of one key recompute the
// same value, so last-writer-wins is harmless.
class ApCache {
 public:
  std::optional<std::int64_t> get(std::int64_t l) const;
  void put(std::int64_t l, std::int64_t a);
  std::map<std::int64_t, std::int64_t> snapshot() const;

 private:
  mutable std::mutex mu_;
  std::map<std::int64_t, std::int64_t> values_;
};

enum class Reduction { kGood, kSplit, kNonsplit, kAdditive };
const char* to_string(Reduction r);

/// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// with catalog-supplied conductor. The model is assumed globally minimal.
struct CurveData {
  std::string label;
  std::array<std::int64_t, 5> a{};  // a1, a2, a3, a4, a6
  std::int64_t conductor = 1;
  // Eigenvalue of the Fricke involution on f_E; the root number is its
  // negative.
  std::optional<int> fricke_sign;
  std::optional<int> known_rank;
  std::shared_ptr<ApCache> ap_cache = std::make_shared<ApCache>();

  std::int64_t a1() const { return a[0]; }
  std::int64_t a2() const { return a[1]; }
  std::int64_t a3() const { return a[2]; }
  std::int64_t a4() const { return a[3]; }
  std::int64_t a6() const { return a[4]; }

  Int discriminant() const;
  bool is_bad(std::int64_t l) const { return conductor % l == 0; }
  std::optional<int> root_number() const;
};

CurveData make_curve(std::string label, std::array<std::int64_t, 5> a,
                     std::int64_t conductor,
                     std::optional<int> fricke_sign = std::nullopt);

/// Number of projective points of the reduction mod l, singular point
/// included. Valid for every prime l.
std::int64_t count_reduced_points(const CurveData& curve, std::int64_t l);

/// a_l = l + 1 - #E(F_l) for a good prime l <= bound. Cached.
std::int64_t count_points(const CurveData& curve, std::int64_t l,
                          std::int64_t bound = kDefaultPointCountBound);

Reduction reduction_type(const CurveData& curve, std::int64_t l);

/// a_l in {1, -1, 0} for l | N from the tangent cone at the singular point.
int bad_ap(const CurveData& curve, std::int64_t l);

// Either branch, cached.
std::int64_t ap(const CurveData& curve, std::int64_t l,
                std::int64_t bound = kDefaultPointCountBound);

/// Coefficients a_1..a_bound of f_E (index 0 unused), extended
/// multiplicatively from a_l.
std::vector<std::int64_t> an_coefficients(const CurveData& curve,
                                          std::int64_t bound);

struct EulerFactor {
  std::int64_t prime = 0;
  std::vector<std::int64_t> coeffs;  // constant term first

  std::int64_t evaluate(std::int64_t x) const;
  std::string to_string() const;
};

EulerFactor euler_factor(const CurveData& curve, std::int64_t l);

/// One catalog record:
///   <label> [a1,a2,a3,a4,a6] <N> <+|-|?> [rank=<r>] [ap=<l>:<a>,...]
CurveData parse_catalog_line(const std::string& line, int line_number);
std::vector<CurveData> load_catalog(const std::string& path);
std::vector<CurveData> parse_catalog(const std::string& text);

// Catalog compiled into the library (11a1, 15a1, 32a, 37a1, 37b1, ...).
const std::string& bundled_catalog_text();
std::vector<CurveData> bundled_catalog();

const CurveData* find_curve(const std::vector<CurveData>& catalog,
                            const std::string& label);

}  // namespace betti
