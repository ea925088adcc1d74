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

#include "betti/mazur_tate.hpp"

#include <algorithm>

#include "betti/errors.hpp"
#include "betti/kernels.hpp"

namespace betti {

CurveSymbols calibrated(const CurveSymbols& s) {
  auto cal = calibrate_periods(s.plus, s.curve);
  if (!cal.determined) {
    throw PreconditionError("calibrated: " + cal.note + " for " + s.curve.label);
  }
  CurveSymbols out = s;
  out.plus = s.plus.with_calibration(cal.lambda);
  return out;
}

ThetaElement theta_element(const CurveSymbols& s, std::int64_t m) {
  if (m < 1) throw PreconditionError("theta_element: modulus must be >= 1");
  ThetaElement t;
  t.label = s.curve.label;
  t.modulus = m;
  t.mode = s.plus.mode;
  t.plus = RatGroupRing(m, kernels::symbol_values_parallel(s.plus, m), Rat(0));
  t.minus = RatGroupRing(m, kernels::symbol_values_parallel(s.minus, m), Rat(0));
  return t;
}

const ThetaElement& ThetaCache::get(std::int64_t m) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  ThetaElement t = theta_element(symbols_, m);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(m, std::move(t)).first->second;
}

const char* to_string(NormVariant v) { return v == NormVariant::kA ? "A" : "B"; }

RatGroupRing norm_relation_rhs(ThetaCache& cache, std::int64_t m, std::int64_t l,
                               NormVariant v) {
  const auto& curve = cache.symbols().curve;
  if (!nt::is_prime(l) || curve.is_bad(l)) {
    throw PreconditionError("norm relation: l = " + std::to_string(l) +
                            " must be a good prime");
  }
  Rat al(ap(curve, l));
  RatGroupRing theta_m = cache.get(m).total();
  const Rat weight = v == NormVariant::kA ? Rat(1) : Rat(l);
  if (m % l != 0) {
    std::int64_t linv = m == 1 ? 0 : nt::invmod(nt::mod(l, m), m);
    return theta_m.scaled(al) - theta_m.shifted(l) -
           theta_m.shifted(linv).scaled(weight);
  }
  RatGroupRing lower = cache.get(m / l).total().norm_map(m);
  return theta_m.scaled(al) - lower.scaled(weight);
}

NormRelationReport check_norm_relation(ThetaCache& cache, std::int64_t m,
                                       std::int64_t l) {
  NormRelationReport r;
  r.label = cache.symbols().curve.label;
  r.m = m;
  r.l = l;
  r.l_divides_m = m % l == 0;
  auto rhs_a = norm_relation_rhs(cache, m, l, NormVariant::kA);
  auto rhs_b = norm_relation_rhs(cache, m, l, NormVariant::kB);
  r.a_l = ap(cache.symbols().curve, l);
  auto lhs = cache.get(m * l).total().project(m);
  r.witness_a = first_difference(lhs, rhs_a);
  r.witness_b = first_difference(lhs, rhs_b);
  r.holds_a = r.witness_a < 0;
  r.holds_b = r.witness_b < 0;
  if (r.holds_a && r.holds_b) {
    r.verdict = "indeterminate";
  } else if (r.holds_a) {
    r.verdict = "A";
  } else if (r.holds_b) {
    r.verdict = "B";
  } else {
    r.verdict = "neither";
  }
  return r;
}

TwistedAvatar twisted_lvalue_avatar(ThetaCache& cache, const DirichletCharacter& chi) {
  TwistedAvatar out;
  out.value = eval_character(cache.get(chi.modulus()).total(), chi);
  out.parity = chi.parity();
  return out;
}

IntegralityReport integrality_report(ThetaCache& cache, std::int64_t p, int n) {
  if (!nt::is_prime(p) || p == 2) {
    throw PreconditionError("integrality_report: p must be an odd prime");
  }
  IntegralityReport r;
  r.p = p;
  r.n = n;
  const auto& t = cache.get(nt::ipow(p, n));
  r.mode = t.mode;
  for (const auto* part : {&t.plus, &t.minus}) {
    for (const auto& c : part->coeffs()) {
      if (c.is_zero()) continue;
      r.clearing_exponent = std::max(r.clearing_exponent, -valuation(c, p));
    }
  }
  r.p_integral = r.clearing_exponent == 0;
  return r;
}

}  // namespace betti
