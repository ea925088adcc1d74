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
#include "betti/modsym.hpp"
#include "betti/numtheory.hpp"

using namespace betti;

namespace {

const CurveData& get(const std::string& label) {
  static const auto cat = bundled_catalog();
  const CurveData* c = find_curve(cat, label);
  REQUIRE(c != nullptr);
  return *c;
}

// Oracle: classical genus and cusp-count formulas for Gamma_0(N), written
// from the index, elliptic-point and cusp counts by brute force.
std::pair<std::int64_t, std::int64_t> genus_cusps(std::int64_t n) {
  Rat mu(n);
  for (auto [p, e] : nt::factorize(n)) {
    (void)e;
    mu *= Rat(Int(static_cast<long>(p + 1)), Int(static_cast<long>(p)));
  }
  std::int64_t nu2 = 0, nu3 = 0, cusps = 0;
  for (std::int64_t x = 0; x < n; ++x) {
    if ((x * x + 1) % n == 0) ++nu2;
    if ((x * x + x + 1) % n == 0) ++nu3;
  }
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) cusps += nt::euler_phi(nt::gcd(d, n / d));
  }
  Rat g = Rat(1) + mu / Rat(12) - Rat(Int(static_cast<long>(nu2)), Int(4)) -
          Rat(Int(static_cast<long>(nu3)), Int(3)) - Rat(Int(static_cast<long>(cusps)), Int(2));
  REQUIRE(g.is_integer());
  return {g.num().get_si(), cusps};
}

Rat val(const EigenSymbol& e, const Rat& r) { return symbol_value(e, r); }

std::vector<Rat> sample_rationals() {
  std::vector<Rat> out;
  for (long d = 1; d <= 23; d += 2) {
    for (long n = -d - 3; n <= d + 3; n += 3) out.emplace_back(Int(n), Int(d));
  }
  return out;
}

}  // namespace

TEST_CASE("space dimensions: examples and 2g + c - 1 for N <= 50") {
  CHECK(ModularSymbolSpace::build(11)->dimension() == 3);
  CHECK(ModularSymbolSpace::build(37)->dimension() == 5);
  CHECK(ModularSymbolSpace::build(15)->dimension() == 5);
  for (std::int64_t n = 2; n <= 50; ++n) {
    auto [g, c] = genus_cusps(n);
    CHECK(genus_x0(n) == g);
    CHECK(cusps_x0(n) == c);
    CHECK(static_cast<std::int64_t>(ModularSymbolSpace::build(n)->dimension()) == 2 * g + c - 1);
  }
}

TEST_CASE("Manin 2-term and 3-term relations hold in the quotient for N <= 50") {
  for (std::int64_t n = 2; n <= 50; ++n) {
    auto sp = ModularSymbolSpace::build(n);
    const std::size_t dim = sp->dimension();
    for (std::size_t i = 0; i < sp->num_symbols(); ++i) {
      auto [a, b] = sp->s_relation(i);
      auto t = sp->tau_relation(i);
      for (std::size_t j = 0; j < dim; ++j) {
        CHECK(sp->coords(a)[j] + sp->coords(b)[j] == Rat(0));
        CHECK(sp->coords(t[0])[j] + sp->coords(t[1])[j] + sp->coords(t[2])[j] == Rat(0));
      }
    }
  }
}

TEST_CASE("Heilbronn matrices have determinant n") {
  for (std::int64_t n : {2, 3, 5, 7, 11}) {
    auto hs = heilbronn_matrices(n);
    CHECK(!hs.empty());
    for (const auto& h : hs) CHECK(h[0] * h[3] - h[1] * h[2] == n);
  }
}

TEST_CASE("Hecke operators commute") {
  for (std::int64_t n : {11, 15, 37}) {
    auto sp = ModularSymbolSpace::build(n);
    std::vector<std::int64_t> ls;
    for (std::int64_t l : {2, 3, 5, 7}) {
      if (n % l) ls.push_back(l);
    }
    for (auto a : ls) {
      for (auto b : ls) {
        CHECK(sp->hecke_matrix(a) * sp->hecke_matrix(b) ==
              sp->hecke_matrix(b) * sp->hecke_matrix(a));
      }
    }
  }
}

TEST_CASE("level 11: T_2 and T_3 have cuspidal eigenvalues -2 and -1") {
  auto sp = ModularSymbolSpace::build(11);
  auto id = Matrix::identity(3);
  // Eisenstein eigenvalue is l + 1.
  CHECK((sp->hecke_matrix(2) - id.scaled(Rat(-2))) * (sp->hecke_matrix(2) - id.scaled(Rat(3))) ==
        Matrix(3, 3));
  CHECK((sp->hecke_matrix(3) - id.scaled(Rat(-1))) * (sp->hecke_matrix(3) - id.scaled(Rat(4))) == Matrix(3, 3));
}

TEST_CASE("eigen-symbols exist, are integral with content 1, and are eigen") {
  for (const char* label : {"11a1", "37a1", "15a1"}) {
    auto cs = curve_symbols(get(label));
    for (const auto* e : {&cs.plus, &cs.minus}) {
      Int g = 0;
      for (const auto& v : e->manin_values) g = gcd(g, v);
      CHECK(g == 1);
      for (std::int64_t l : nt::primes_up_to(20)) {
        if (cs.curve.is_bad(l)) continue;
        auto lhs = cs.space->hecke_matrix(l).apply_left(e->functional);
        for (std::size_t j = 0; j < lhs.size(); ++j) {
          CHECK(lhs[j] == Rat(static_cast<long>(ap(cs.curve, l))) * e->functional[j]);
        }
      }
    }
    CHECK(symbol_value(cs.plus, Rat(0)).sign() >= 0);
  }
}

TEST_CASE("oldform collision is reported") {
  const CurveData& e = get("11a1");
  CurveData fake = make_curve("11a1@22", e.a, 22);
  auto sp = ModularSymbolSpace::build(22);
  CHECK_THROWS_AS(eigen_symbol(sp, fake, 1), PreconditionError);
}

TEST_CASE("symbol values: parity, periodicity, Gamma_0(N) invariance") {
  for (const char* label : {"11a1", "37a1"}) {
    auto cs = curve_symbols(get(label));
    const long n = static_cast<long>(cs.curve.conductor);
    for (const Rat& r : sample_rationals()) {
      CHECK(val(cs.plus, -r) == val(cs.plus, r));
      CHECK(val(cs.minus, -r) == -val(cs.minus, r));
      CHECK(val(cs.plus, r + Rat(1)) == val(cs.plus, r));
      CHECK(val(cs.minus, r + Rat(1)) == val(cs.minus, r));
      // gamma = [[1, 0], [N, 1]]: {gamma oo, gamma r} = {1/N, r/(N r + 1)}.
      Rat denom = Rat(n) * r + Rat(1);
      if (denom.is_zero()) continue;
      Rat gr = r / denom;
      Rat g_inf(Int(1), Int(n));
      for (const auto* e : {&cs.plus, &cs.minus}) {
        CHECK(val(*e, gr) - val(*e, g_inf) == val(*e, r));
      }
    }
  }
}

TEST_CASE("Hecke action on paths from infinity (path oracle)") {
  // T_l {oo, r} = sum_j {oo, (r + j)/l} + {oo, l r}.
  for (const char* label : {"11a1", "37a1"}) {
    auto cs = curve_symbols(get(label));
    for (std::int64_t l : {2, 3, 5, 7}) {
      if (cs.curve.is_bad(l)) continue;
      const Rat al(static_cast<long>(ap(cs.curve, l)));
      for (const Rat& r : sample_rationals()) {
        for (const auto* e : {&cs.plus, &cs.minus}) {
          Rat lhs = val(*e, Rat(static_cast<long>(l)) * r);
          for (long j = 0; j < l; ++j) lhs += val(*e, (r + Rat(j)) / Rat(static_cast<long>(l)));
          CHECK(lhs == al * val(*e, r));
        }
      }
    }
  }
}

TEST_CASE("[0]^+ vanishes for rank one and calibrates to 1/5 on 11a1") {
  auto e37 = curve_symbols(get("37a1"));
  CHECK(symbol_value(e37.plus, Rat(0)) == Rat(0));
  auto c37 = calibrate_periods(e37.plus, get("37a1"));
  CHECK_FALSE(c37.determined);
  CHECK(c37.note == "calibration undetermined at r=0");

  auto e11 = curve_symbols(get("11a1"));
  auto c11 = calibrate_periods(e11.plus, get("11a1"));
  REQUIRE(c11.determined);
  CHECK(c11.lambda * symbol_value(e11.plus, Rat(0)) == Rat(Int(1), Int(5)));
  CHECK(c11.relative_error < 1e-6);
  auto cal = e11.plus.with_calibration(c11.lambda);
  CHECK(symbol_value(cal, Rat(0)) == Rat(Int(1), Int(5)));
  CHECK_THROWS_AS(calibrate_periods(e11.minus, get("11a1")), PreconditionError);

  // Doubling the integral basis halves lambda.
  EigenSymbol doubled = e11.plus;
  for (auto& v : doubled.manin_values) v *= 2;
  for (auto& v : doubled.functional) v *= Rat(2);
  auto c2 = calibrate_periods(doubled, get("11a1"));
  REQUIRE(c2.determined);
  CHECK(c2.lambda == c11.lambda / Rat(2));
}

TEST_CASE("calibration for other rank-zero curves is a small rational") {
  for (const char* label : {"15a1", "19a1", "32a", "37b1"}) {
    auto cs = curve_symbols(get(label));
    auto c = calibrate_periods(cs.plus, cs.curve);
    CHECK(c.determined);
    CHECK(c.relative_error < 1e-6);
  }
}
