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

#include <algorithm>
#include <map>

#include "betti/errors.hpp"
#include "betti/padic.hpp"
#include "betti/numtheory.hpp"
#include "oracles.hpp"

using namespace betti;
using betti::testing::binomial_expand;
using betti::testing::newton_polygon;

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

// Projective synthetic tower: layer n is the image of x (mod p^n_max).
PadicThetaTower projected_tower(const ModGroupRing& top, std::int64_t p, int k, int n_max) {
  std::vector<ModGroupRing> layers;
  for (int n = 1; n <= n_max; ++n) layers.push_back(top.project(nt::ipow(p, n)));
  return tower_from_layers(p, k, layers);
}

ModGroupRing delta_mod(std::int64_t m, std::int64_t a, std::int64_t pk) {
  return ModGroupRing::delta(m, a, ModInt(1, pk));
}

}  // namespace

TEST_CASE("stabilize examples and errors") {
  ThetaCache c11(symbols("11a1"));
  auto t = stabilize(c11, 5, 2, 2);
  CHECK(t.alpha == ModInt(21, 25));
  CHECK(check_projectivity(t).holds);
  auto w = t.layer(2).project(5) - t.layer(1);
  for (const auto& x : w.coeffs()) CHECK(x.is_zero());
  CHECK_THROWS_AS(stabilize(c11, 11, 2, 2), NonOrdinaryError);
  CHECK_THROWS_AS(stabilize(c11, 2, 2, 2), PreconditionError);
  ThetaCache c37(symbols("37a1"));
  CHECK_THROWS_AS(stabilize(c37, 3, 2, 2), NonOrdinaryError);
}

TEST_CASE("layers follow the stabilization formula") {
  ThetaCache c(symbols("11a1"));
  const std::int64_t p = 3, pk = 81;
  auto t = stabilize(c, p, 4, 3);
  ModInt ainv = t.alpha.inverse();
  for (int n = 1; n <= 3; ++n) {
    std::int64_t level = nt::ipow(p, n);
    auto cur = c.get(level).total();
    auto prev = c.get(level / p).total();
    for (std::int64_t a : t.layer(n).units()) {
      // Oracle: nu(prev) at a is prev at a mod p^(n-1).
      ModInt v = ModInt::from_rat(cur.coeff(a), pk) -
                 ainv * ModInt::from_rat(prev.coeff(a % (level / p)), pk);
      CHECK(t.layer(n).at(static_cast<std::size_t>(
                std::find(t.layer(n).units().begin(), t.layer(n).units().end(), a) -
                t.layer(n).units().begin())) == v * ainv.pow(n));
    }
  }
}

TEST_CASE("only the adjudicated variant gives a projective tower") {
  for (auto [label, p] : std::vector<std::pair<std::string, std::int64_t>>{
           {"11a1", 3}, {"11a1", 7}, {"37a1", 5}}) {
    ThetaCache c(symbols(label));
    CHECK(check_projectivity(stabilize(c, p, 3, 3, NormVariant::kA)).holds);
    CHECK_FALSE(check_projectivity(stabilize(c, p, 3, 3, NormVariant::kB)).holds);
  }
}

TEST_CASE("trivial character interpolation") {
  ThetaCache c37(symbols("37a1"));
  auto r37 = interpolate_trivial(stabilize(c37, 5, 2, 3));
  CHECK(r37.holds);
  CHECK(r37.augmentation.is_zero());
  CHECK(r37.expected.is_zero());
  ThetaCache c11(symbols("11a1"));
  auto t = stabilize(c11, 3, 4, 3);
  auto r = interpolate_trivial(t);
  CHECK(r.holds);
  CHECK(r.layers_agree);
  // Independent right-hand side: (1 - 1/alpha)^2 times theta at level 1.
  ModInt f = ModInt(1, 81) - hensel_unit_root(ap(symbols("11a1").curve, 3), 3, 4).inverse();
  CHECK(r.augmentation == f * f * ModInt::from_rat(c11.get(1).total().coeff(0), 81));
  CHECK(t.layer(2).augmentation() == t.layer(3).augmentation());
}

TEST_CASE("character interpolation") {
  ThetaCache c(symbols("11a1"));
  auto t = stabilize(c, 3, 3, 3);
  int seen = 0;
  for (const auto& chi : DirichletCharacter::primitive(9)) {
    if (chi.order() != 3) continue;
    ++seen;
    auto r = interpolate_character(t, chi);
    CHECK(r.holds);
    auto rb = interpolate_character(t, chi.conjugate());
    CHECK(rb.holds);
    auto conj = reduce_cyc(eval_character(t.raw[1], chi).conj(), 27)
                    .scaled(t.alpha.inverse().pow(2));
    CHECK(rb.lhs == conj);
  }
  CHECK(seen == 2);
  auto triv = interpolate_character(t, DirichletCharacter::trivial(1));
  CHECK(triv.holds == interpolate_trivial(t).holds);
  CHECK_THROWS_AS(interpolate_character(t, DirichletCharacter::primitive(5)[0]),
                  PreconditionError);
}

TEST_CASE("synthetic towers and scaling") {
  const std::int64_t p = 3;
  const int k = 4;
  const std::int64_t pk = 81;
  auto unit = projected_tower(delta_mod(81, 1, pk), p, k, 4);
  CHECK(check_projectivity(unit).holds);
  auto inv = iwasawa_invariants(unit);
  CHECK(inv.lambda == 0);
  CHECK(inv.mu == 0);
  auto by_p = iwasawa_invariants(unit.scaled(ModInt(3, pk)));
  CHECK(by_p.mu == 1);
  CHECK(by_p.lambda == 0);
  // gamma - 1 maps to T: lambda = 1.
  auto t1 = projected_tower(delta_mod(81, 4, pk) - delta_mod(81, 1, pk), p, k, 4);
  auto i1 = iwasawa_invariants(t1);
  CHECK(i1.lambda == 1);
  CHECK(i1.mu == 0);
  auto iu = iwasawa_invariants(t1.scaled(ModInt(2, pk)));
  CHECK(iu.lambda == 1);
  CHECK(iu.mu == 0);
  CHECK_THROWS_AS(iwasawa_invariants(projected_tower(delta_mod(9, 1, pk), p, k, 2)),
                  PreconditionError);
  CHECK_THROWS_AS(iwasawa_invariants(unit.scaled(ModInt(0, pk))), PrecisionError);
}

TEST_CASE("curve tower scaling covariance") {
  ThetaCache c(symbols("11a1"));
  auto t = stabilize(c, 3, 6, 4);
  auto base = iwasawa_invariants(t);
  auto u = iwasawa_invariants(t.scaled(ModInt(5, 729)));
  CHECK(u.lambda == base.lambda);
  CHECK(u.mu == base.mu);
  auto s = iwasawa_invariants(t.scaled(ModInt(3, 729)));
  CHECK(s.lambda == base.lambda);
  CHECK(s.mu == base.mu + 1);
}

TEST_CASE("lambda and mu against a Newton polygon oracle") {
  ThetaCache c(symbols("11a1"));
  auto t = stabilize(c, 3, 6, 4);
  auto inv = iwasawa_invariants(t);
  CHECK(inv.stable);
  for (int n = 3; n <= 4; ++n) {
    auto tame = testing::tame_component(t.layer(n), 3, 729);
    CHECK(tame == tame_trivial_component(t.layer(n), 3));
    auto b = binomial_expand(tame, 729);
    CHECK(b == to_t_expansion(tame));
    auto [lambda, mu] = newton_polygon(b, 3);
    CHECK(lambda == inv.lambda);
    CHECK(mu == inv.mu);
  }
  ThetaCache c37(symbols("37a1"));
  auto t37 = stabilize(c37, 5, 4, 3);
  auto i37 = iwasawa_invariants(t37);
  auto [l37, m37] = newton_polygon(binomial_expand(testing::tame_component(t37.layer(3), 5, 625), 625), 5);
  CHECK(i37.lambda == l37);
  CHECK(i37.mu == m37);
  CHECK(i37.lambda == 1);
  CHECK(i37.mu == 0);
}
