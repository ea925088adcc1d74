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

#include <doctest.h>

#include <map>

#include "betti/errors.hpp"
#include "betti/mazur_tate.hpp"
#include "betti/numtheory.hpp"

using namespace betti;

namespace {

const CurveSymbols& symbols(const std::string& label) {
  static std::map<std::string, CurveSymbols> memo;
  auto it = memo.find(label);
  if (it != memo.end()) return it->second;
  static const auto cat = bundled_catalog();
  const CurveData* c = find_curve(cat, label);
  REQUIRE(c != nullptr);
  return memo.emplace(label, curve_symbols(*c)).first->second;
}

Rat value(const CurveSymbols& s, std::int64_t a, std::int64_t m) {
  Rat r(Int(static_cast<long>(a)), Int(static_cast<long>(m)));
  return symbol_value(s.plus, r) + symbol_value(s.minus, r);
}

// Oracle: both sides of variant A as maps a (unit mod M) -> Rat, from symbol
// values and residue arithmetic only.
std::map<std::int64_t, Rat> lhs_oracle(const CurveSymbols& s, std::int64_t m, std::int64_t l) {
  std::map<std::int64_t, Rat> out;
  for (std::int64_t b = 1; b <= m * l; ++b) {
    if (nt::gcd(b, m * l) != 1) continue;
    out[b % m] += value(s, b, m * l);
  }
  return out;
}

std::map<std::int64_t, Rat> rhs_a_oracle(const CurveSymbols& s, std::int64_t m, std::int64_t l) {
  std::map<std::int64_t, Rat> out;
  Rat al(ap(s.curve, l));
  for (std::int64_t a = 1; a <= m; ++a) {
    if (nt::gcd(a, m) != 1) continue;
    std::int64_t key = a % m;
    out[key] += al * value(s, a, m);
    if (m % l != 0) {
      // sigma_l theta: coefficient at a is theta_{a / l}; likewise for l^{-1}.
      std::int64_t linv = m == 1 ? 0 : nt::invmod(l % m, m);
      out[key] -= value(s, nt::mulmod(a, linv, m), m);
      out[key] -= value(s, nt::mulmod(a, l % m, m), m);
    } else {
      std::int64_t lower = m / l;
      for (std::int64_t b = 1; b <= lower; ++b) {
        if (nt::gcd(b, lower) != 1) continue;
        if (b % lower == a % lower) out[key] -= value(s, b, lower);
      }
    }
  }
  return out;
}

std::map<std::int64_t, Rat> as_map(const RatGroupRing& x) {
  std::map<std::int64_t, Rat> out;
  for (std::size_t i = 0; i < x.size(); ++i) out[x.units()[i] % x.modulus()] = x.coeffs()[i];
  return out;
}

}  // namespace

TEST_CASE("theta elements at small moduli") {
  ThetaCache c37(symbols("37a1"));
  CHECK(c37.get(1).total().coeff(0) == Rat(0));
  ThetaCache c11(symbols("11a1"));
  CHECK(c11.get(1).total().coeff(0) != Rat(0));
  CHECK(c11.get(2).total().size() == 1);
  CHECK(c11.get(5).total().size() == 4);
  CHECK_THROWS_AS(theta_element(symbols("11a1"), 0), PreconditionError);
}

TEST_CASE("coefficients are symbol values") {
  const auto& s = symbols("11a1");
  for (std::int64_t m : {7, 12, 25}) {
    auto t = theta_element(s, m);
    for (std::size_t i = 0; i < t.plus.size(); ++i) {
      std::int64_t a = t.plus.units()[i];
      Rat r(Int(static_cast<long>(a)), Int(static_cast<long>(m)));
      CHECK(t.plus.coeffs()[i] == symbol_value(s.plus, r));
      CHECK(t.minus.coeffs()[i] == symbol_value(s.minus, r));
    }
  }
}

TEST_CASE("conjugation covariance for M <= 30") {
  for (const char* label : {"11a1", "37a1"}) {
    const auto& s = symbols(label);
    for (std::int64_t m = 1; m <= 30; ++m) {
      auto t = theta_element(s, m);
      auto total = t.total();
      for (std::int64_t a : t.plus.units()) {
        std::int64_t neg = nt::mod(-a, m);
        CHECK(total.coeff(neg) == t.plus.coeff(a) - t.minus.coeff(a));
      }
    }
  }
}

TEST_CASE("norm relation examples") {
  ThetaCache c(symbols("11a1"));
  auto r3 = check_norm_relation(c, 1, 3);
  auto r7 = check_norm_relation(c, 1, 7);
  CHECK(r3.holds_a != r3.holds_b);
  CHECK(r3.verdict == r7.verdict);
  auto r33 = check_norm_relation(c, 3, 3);
  CHECK(r33.l_divides_m);
  CHECK((r33.holds_a || r33.holds_b));
  CHECK_THROWS_AS(check_norm_relation(c, 1, 11), PreconditionError);
}

TEST_CASE("variant A against a direct recomputation") {
  for (const char* label : {"11a1", "37a1"}) {
    const auto& s = symbols(label);
    ThetaCache c(s);
    for (std::int64_t m : {1, 3, 4, 5, 6, 9}) {
      for (std::int64_t l : {2, 3, 5, 7}) {
        if (s.curve.is_bad(l)) continue;
        auto lhs = lhs_oracle(s, m, l);
        auto rhs = rhs_a_oracle(s, m, l);
        CHECK(as_map(c.get(m * l).total().project(m)) == lhs);
        CHECK(as_map(norm_relation_rhs(c, m, l, NormVariant::kA)) == rhs);
        CHECK((lhs == rhs) == check_norm_relation(c, m, l).holds_a);
      }
    }
  }
}

TEST_CASE("twisted avatar is the character sum and respects conjugation") {
  const auto& s = symbols("11a1");
  ThetaCache c(s);
  for (const auto& chi : DirichletCharacter::primitive(5)) {
    auto av = twisted_lvalue_avatar(c, chi);
    CycElt direct(static_cast<long>(chi.value_order()));
    for (std::int64_t a = 1; a < 5; ++a) direct += chi.value(a) * value(s, a, 5);
    CHECK(av.value == direct);
    CHECK(av.parity == chi.parity());
    CHECK(twisted_lvalue_avatar(c, chi.conjugate()).value == av.value.conj());
  }
}

TEST_CASE("integrality") {
  ThetaCache c(symbols("11a1"));
  auto r = integrality_report(c, 3, 2);
  CHECK(r.p_integral);
  CHECK(r.mode == ScalingMode::kIntegral);
  ThetaCache cal(calibrated(symbols("11a1")));
  auto r5 = integrality_report(cal, 5, 1);
  CHECK(r5.mode == ScalingMode::kPeriodCalibrated);
  CHECK_FALSE(r5.p_integral);
  CHECK(r5.clearing_exponent == 1);
  ThetaCache c37(symbols("37a1"));
  CHECK(integrality_report(c37, 3, 1).p_integral);
  CHECK_THROWS_AS(integrality_report(c, 2, 1), PreconditionError);
  CHECK_THROWS_AS(calibrated(symbols("37a1")), PreconditionError);
}
