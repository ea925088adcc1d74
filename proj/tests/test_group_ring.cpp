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

#include <random>

#include "betti/errors.hpp"
#include "betti/group_ring.hpp"
#include "betti/numtheory.hpp"
#include "oracles.hpp"

using namespace betti;

namespace {

RatGroupRing random_element(std::mt19937_64& rng, std::int64_t m) {
  std::uniform_int_distribution<long> d(-9, 9);
  RatGroupRing x(m, Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i) x.at(i) = Rat(d(rng));
  return x;
}

CycElt one(long l) { return CycElt::from_rat(l, Rat(1)); }

}  // namespace

TEST_CASE("project examples") {
  auto d = RatGroupRing::delta(15, 1, Rat(1));
  CHECK(d.project(5) == RatGroupRing::delta(5, 1, Rat(1)));
  auto ones = RatGroupRing::group_sum(15, Rat(1));
  CHECK(ones.project(5) == RatGroupRing::group_sum(5, Rat(2)));
  CHECK_THROWS_AS(ones.project(4), PreconditionError);
}

TEST_CASE("norm_map examples") {
  auto nu = RatGroupRing::delta(1, 1, Rat(1)).norm_map(5);
  CHECK(nu == RatGroupRing::group_sum(5, Rat(1)));
  auto lifted = RatGroupRing::delta(5, 1, Rat(1)).norm_map(15);
  CHECK(lifted.project(5) == RatGroupRing::delta(5, 1, Rat(2)));
  CHECK_THROWS_AS(RatGroupRing::delta(5, 1, Rat(1)).norm_map(12), PreconditionError);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    auto x = random_element(rng, 7), y = random_element(rng, 7);
    CHECK((x + y).norm_map(21) == x.norm_map(21) + y.norm_map(21));
  }
}

TEST_CASE("project after norm_map is multiplication by the fiber size") {
  std::mt19937_64 rng(9);
  const std::int64_t ls[] = {2, 3, 5, 7, 11};
  for (int i = 0; i < 20; ++i) {
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 30);
    std::int64_t l = ls[rng() % 5];
    auto x = random_element(rng, m);
    Rat deg(static_cast<long>(nt::euler_phi(m * l) / nt::euler_phi(m)));
    CHECK(x.norm_map(m * l).project(m) == x.scaled(deg));
  }
}

TEST_CASE("characters: counts, multiplicativity, parity, conductors") {
  for (std::int64_t d = 1; d <= 40; ++d) {
    auto all = DirichletCharacter::all(d);
    CHECK(static_cast<std::int64_t>(all.size()) == nt::euler_phi(d));
    std::int64_t prim_total = 0;
    for (std::int64_t e = 1; e <= d; ++e) {
      if (d % e == 0) prim_total += static_cast<std::int64_t>(DirichletCharacter::primitive(e).size());
    }
    CHECK(prim_total == nt::euler_phi(d));
    for (const auto& chi : all) {
      const auto n = chi.value_order();
      for (std::int64_t a : nt::units_mod(d)) {
        for (std::int64_t b : nt::units_mod(d)) {
          CHECK(nt::mod(chi.exponent(a) + chi.exponent(b), n) ==
                chi.exponent(nt::mulmod(a, b, d)));
        }
      }
      CycElt minus = chi.value(nt::mod(-1, d));
      CHECK(minus == CycElt::from_rat(static_cast<long>(n), Rat(chi.parity())));
      CHECK(d % chi.conductor() == 0);
    }
  }
  CHECK_THROWS_AS(DirichletCharacter::from_generator_exponents(5, {1, 1}), PreconditionError);
}

TEST_CASE("eval_character examples") {
  auto x = RatGroupRing::group_sum(5, Rat(1)) + RatGroupRing::delta(5, 2, Rat(3));
  CHECK(eval_character(x, DirichletCharacter::trivial(5)) ==
        CycElt::from_rat(1, x.augmentation()));
  for (const auto& chi : DirichletCharacter::all(7)) {
    auto v = eval_character(RatGroupRing::delta(7, 3, Rat(1)), chi);
    CHECK(v == chi.value(3));
  }
  for (const auto& chi : DirichletCharacter::all(5)) {
    if (chi.order() != 2) continue;
    CHECK(eval_character(RatGroupRing::group_sum(5, Rat(1)), chi).is_zero());
  }
  CHECK_THROWS_AS(eval_character(RatGroupRing::group_sum(6, Rat(1)),
                                 DirichletCharacter::all(5)[1]),
                  MismatchError);
}

TEST_CASE("eval_character commutes with projection") {
  std::mt19937_64 rng(13);
  for (std::int64_t m : {5, 7, 8, 9, 12}) {
    for (std::int64_t l : {2, 3, 5}) {
      auto x = random_element(rng, m * l);
      for (const auto& chi : DirichletCharacter::all(m)) {
        CHECK(eval_character(x.project(m), chi) == eval_character(x, chi.lift(m * l)));
      }
    }
  }
}

TEST_CASE("ModInt character evaluation agrees with exact evaluation reduced mod p^k") {
  std::mt19937_64 rng(17);
  for (std::int64_t m : {9, 25, 27, 49}) {
    auto x = random_element(rng, m);
    auto xm = reduce_mod(x, 243);
    for (const auto& chi : DirichletCharacter::all(m)) {
      CHECK(eval_character(xm, chi) == reduce_cyc(eval_character(x, chi), 243));
    }
  }
}

TEST_CASE("gauss sums") {
  for (const auto& chi : DirichletCharacter::primitive(5)) {
    CHECK(gauss_sum(chi) == testing::gauss_sum_direct(chi));
    if (chi.order() == 2) {
      CycElt t = gauss_sum(chi);
      CHECK(t * t == CycElt::from_rat(static_cast<long>(t.conductor()), Rat(5)));
    }
  }
  CHECK(gauss_sum(DirichletCharacter::trivial(1)) == one(1));
  CHECK_THROWS_AS(gauss_sum(DirichletCharacter::trivial(5)), PreconditionError);
  int count = 0;
  for (std::int64_t d = 1; d <= 13; ++d) {
    for (const auto& chi : DirichletCharacter::primitive(d)) {
      ++count;
      CycElt t = testing::gauss_sum_direct(chi);
      CHECK(gauss_sum(chi) == t);
      CycElt prod = t * testing::gauss_sum_direct(chi.conjugate());
      CHECK(prod == CycElt::from_rat(static_cast<long>(prod.conductor()),
                                     Rat(static_cast<long>(chi.parity() * d))));
    }
  }
  CHECK(count == 38);
}

TEST_CASE("Kolyvagin derivative examples") {
  auto d3 = kolyvagin_derivative(3, 2);
  CHECK(d3.coeff(1) == Rat(0));
  CHECK(d3.coeff(2) == Rat(1));
  auto d5 = kolyvagin_derivative(5, 2);
  auto lhs = d5.shifted(2) - d5;
  CHECK(lhs == RatGroupRing::delta(5, 1, Rat(4)) - RatGroupRing::group_sum(5, Rat(1)));
  CHECK_THROWS_AS(kolyvagin_derivative(7, 2), PreconditionError);
  CHECK(check_telescoping(7, 3).holds);
  CHECK(check_telescoping(7, 5).holds);
}

TEST_CASE("telescoping identity for every l <= 100 and every primitive root") {
  for (std::int64_t l : nt::primes_up_to(100)) {
    for (std::int64_t eta = 1; eta < l; ++eta) {
      if (!nt::is_primitive_root(eta, l)) continue;
      // Oracle construction of D_l by enumeration.
      RatGroupRing d(l, Rat(0));
      std::int64_t g = 1;
      for (std::int64_t i = 0; i <= l - 2; ++i) {
        d.coeff(g) += Rat(static_cast<long>(i));
        g = g * eta % l;
      }
      REQUIRE(kolyvagin_derivative(l, eta) == d);
      auto lhs = d.shifted(eta) - d;
      auto rhs = RatGroupRing::delta(l, 1, Rat(static_cast<long>(l - 1))) -
                 RatGroupRing::group_sum(l, Rat(1));
      CHECK(lhs == rhs);
      CHECK(check_telescoping(l, eta).holds);
    }
  }
}
