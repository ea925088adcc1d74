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

// Theta elements sum_a [a/M]_f sigma_a and the checks built on them.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "betti/group_ring.hpp"
#include "betti/modsym.hpp"

namespace betti {

struct ThetaElement {
  std::string label;
  std::int64_t modulus = 1;
  RatGroupRing plus;   // sum [a/M]^+ sigma_a
  RatGroupRing minus;  // sum [a/M]^- sigma_a
  ScalingMode mode = ScalingMode::kIntegral;

  RatGroupRing total() const { return plus + minus; }
};

/// Replace the + symbol by its period-calibrated version. Throws when the
/// calibration is undetermined.
CurveSymbols calibrated(const CurveSymbols& s);

ThetaElement theta_element(const CurveSymbols& s, std::int64_t m);

// Memo of theta elements for one curve, keyed by modulus.
class ThetaCache {
 public:
  explicit ThetaCache(CurveSymbols s) : symbols_(std::move(s)) {}
  const CurveSymbols& symbols() const { return symbols_; }
  const ThetaElement& get(std::int64_t m);

 private:
  CurveSymbols symbols_;
  std::mutex mu_;
  std::map<std::int64_t, ThetaElement> cache_;
};

enum class NormVariant { kA, kB };
const char* to_string(NormVariant v);

/// Right-hand side of the chosen candidate relation for pi(theta_{Ml}).
RatGroupRing norm_relation_rhs(ThetaCache& cache, std::int64_t m, std::int64_t l,
                               NormVariant v);

struct NormRelationReport {
  std::string label;
  std::int64_t m = 1;
  std::int64_t l = 2;
  bool l_divides_m = false;
  std::int64_t a_l = 0;
  bool holds_a = false;
  bool holds_b = false;
  std::int64_t witness_a = -1;  // first failing residue mod M, or -1
  std::int64_t witness_b = -1;
  // "A", "B", "indeterminate" or "neither".
  std::string verdict;
};

/// Compare pi(theta_{Ml}) against both candidates, coefficientwise.
NormRelationReport check_norm_relation(ThetaCache& cache, std::int64_t m,
                                       std::int64_t l);

struct TwistedAvatar {
  CycElt value;
  int parity = 1;  // selects Omega^{chi(-1)}
};

/// chi(theta_d) for chi of modulus d.
TwistedAvatar twisted_lvalue_avatar(ThetaCache& cache, const DirichletCharacter& chi);

struct IntegralityReport {
  std::int64_t p = 0;
  int n = 0;
  ScalingMode mode = ScalingMode::kIntegral;
  bool p_integral = true;
  int clearing_exponent = 0;  // least e with p^e theta p-integral
};

IntegralityReport integrality_report(ThetaCache& cache, std::int64_t p, int n);

}  // namespace betti
