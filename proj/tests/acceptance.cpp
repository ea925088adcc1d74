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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "betti/errors.hpp"
#include "betti/kurihara.hpp"
#include "betti/mazur_tate.hpp"
#include "betti/numeric_oracle.hpp"
#include "betti/padic.hpp"
#include "betti/qexp.hpp"
#include "oracles.hpp"

using namespace betti;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const CurveData& curve(const std::string& label) {
  static const auto cat = bundled_catalog();
  const CurveData* c = find_curve(cat, label);
  if (c == nullptr) throw PreconditionError("missing catalog curve " + label);
  return *c;
}

const CurveSymbols& symbols(const std::string& label) {
  static std::map<std::string, CurveSymbols> memo;
  auto it = memo.find(label);
  if (it == memo.end()) it = memo.emplace(label, curve_symbols(curve(label))).first;
  return it->second;
}

ThetaCache& cache(const std::string& label) {
  static std::map<std::string, std::unique_ptr<ThetaCache>> memo;
  auto& slot = memo[label];
  if (!slot) slot = std::make_unique<ThetaCache>(symbols(label));
  return *slot;
}

const std::vector<std::pair<std::string, std::int64_t>> kOrdinary = {
    {"11a1", 3}, {"11a1", 7}, {"37a1", 5}};

Outcome c1() {
  auto z37 = cache("37a1").get(1).total().coeff(0);
  auto z11 = cache("11a1").get(1).total().coeff(0);
  return {z37.is_zero() && !z11.is_zero(),
          "theta(37a1) = " + z37.to_string() + ", theta(11a1) = " + z11.to_string()};
}

Outcome c2() {
  const auto& s = symbols("11a1");
  auto cal = calibrate_periods(s.plus, s.curve);
  if (!cal.determined) return {false, "calibration undetermined: " + cal.note};
  Rat v = cal.lambda * symbol_value(s.plus, Rat(0));
  const auto& e = s.curve;
  double ratio = oracle::lvalue_at_one(e).value / oracle::real_period(e);
  double rel = std::abs(v.to_double() - ratio) / std::abs(ratio);
  std::ostringstream os;
  os << "lambda [0]^+ = " << v.to_string() << ", L/Omega = " << ratio << ", rel err " << rel;
  return {rel < 1e-6 && v == Rat(Int(1), Int(5)), os.str()};
}

Outcome c3() {
  std::set<std::string> variants;
  int cases = 0, vacuous = 0, bad = 0;
  for (const char* label : {"11a1", "37a1"}) {
    auto& c = cache(label);
    for (std::int64_t l : nt::primes_up_to(150)) {
      if (curve(label).is_bad(l)) continue;
      for (std::int64_t m = 1; m * l <= 150; ++m) {
        auto r = check_norm_relation(c, m, l);
        ++cases;
        if (r.verdict == "indeterminate") {
          ++vacuous;
        } else if (r.verdict == "neither") {
          ++bad;
        } else {
          variants.insert(r.verdict);
        }
      }
    }
  }
  std::string v;
  for (const auto& x : variants) v += (v.empty() ? "" : ",") + x;
  return {bad == 0 && variants.size() == 1,
          std::to_string(cases) + " cases, " + std::to_string(vacuous) +
              " vacuous, " + std::to_string(bad) + " with neither variant, variant {" + v + "}"};
}

Outcome c4() {
  std::string detail;
  bool ok = true;
  for (const auto& [label, p] : kOrdinary) {
    auto t = stabilize(cache(label), p, 6, 4);
    auto r = check_projectivity(t);
    ok = ok && r.holds;
    detail += label + " p=" + std::to_string(p) + (r.holds ? " ok; " : " fails at n=" +
              std::to_string(r.failing_layer) + "; ");
  }
  return {ok, detail + "layers n <= 4 mod p^6"};
}

Outcome c5() {
  std::string detail;
  bool ok = true;
  for (const auto& [label, p] : kOrdinary) {
    auto t = stabilize(cache(label), p, 4, 4);
    auto r = interpolate_trivial(t);
    // Independent right-hand side from theta at level 1 and the unit root.
    const std::int64_t pk = nt::ipow(p, 4);
    ModInt f = ModInt(1, pk) - hensel_unit_root(ap(curve(label), p), p, 4).inverse();
    ModInt rhs = f * f * ModInt::from_rat(cache(label).get(1).total().coeff(0), pk);
    bool pass = r.holds && r.layers_agree && r.augmentation == rhs;
    ok = ok && pass;
    detail += label + " p=" + std::to_string(p) + ": " + r.augmentation.to_string() + " vs " +
              rhs.to_string() + "; ";
  }
  return {ok, detail + "mod p^4, layers 1..4"};
}

Outcome c6() {
  int pairs = 0;
  for (std::int64_t l : nt::primes_up_to(100)) {
    for (std::int64_t eta = 1; eta < l; ++eta) {
      if (!nt::is_primitive_root(eta, l)) continue;
      ++pairs;
      auto d = kolyvagin_derivative(l, eta);
      auto lhs = d.shifted(eta) - d;
      auto rhs = RatGroupRing::delta(l, 1, Rat(static_cast<long>(l - 1))) -
                 RatGroupRing::group_sum(l, Rat(1));
      if (!(lhs == rhs)) {
        return {false, "fails at l=" + std::to_string(l) + " eta=" + std::to_string(eta)};
      }
    }
  }
  return {true, std::to_string(pairs) + " (l, eta) pairs"};
}

Outcome c7() {
  int count = 0;
  for (std::int64_t d = 1; d <= 13; ++d) {
    for (const auto& chi : DirichletCharacter::primitive(d)) {
      ++count;
      CycElt t = gauss_sum(chi);
      if (!(t == testing::gauss_sum_direct(chi))) {
        return {false, "gauss_sum differs from the direct sum for " + chi.to_string()};
      }
      CycElt prod = t * gauss_sum(chi.conjugate());
      if (!(prod.is_rational() && prod.rational_value() == Rat(static_cast<long>(chi.parity() * d)))) {
        return {false, "fails for " + chi.to_string()};
      }
    }
  }
  return {true, std::to_string(count) + " primitive characters"};
}

Outcome c8() {
  const auto& s = symbols("37a1");
  auto set = sieve_admissible(s.curve, 3, 1, 500);
  auto base = nonvanishing_search(s, set, 1);
  bool ok = !base.rows.empty() && base.rows[0].n == 1 && base.rows[0].vanishes();
  int changed = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto alt = nonvanishing_search(s, set, 1, random_primitive_roots(set, seed));
    for (std::size_t i = 0; i < alt.rows.size(); ++i) {
      if (alt.rows[i].vanishes() != base.rows[i].vanishes()) ++changed;
    }
  }
  std::size_t nonzero = 0;
  for (const auto& r : base.rows) nonzero += r.vanishes() ? 0 : 1;
  return {ok && changed == 0,
          std::to_string(base.rows.size()) + " values (" + std::to_string(nonzero) +
              " nonvanishing), delta_1 " + (ok ? "= 0" : "!= 0") + ", " +
              std::to_string(changed) + " status changes over 10 re-choices"};
}

Outcome c9() {
  const std::int64_t n = 5;
  int points = 0;
  bool ok = true;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (a == 0 && b == 0) continue;
      ++points;
      auto pt = TorsionPoint::make(a, b, n);
      auto g1 = rationalized_g_qexp(pt, 10, n + 1);
      auto g2 = rationalized_g_qexp(pt, 10, 2 * n + 1);
      ok = ok && g1.unit.agrees_with(g2.unit, Rat(10)) && g1.lead_exponent == g2.lead_exponent;
    }
  }
  auto rel = check_c_relation(TorsionPoint::make(0, 1, n), 7, 11, 8);
  return {ok && rel.holds, std::to_string(points) + " points, c = 6 vs 11 to q^10; c,d relation (7, 11) " +
                               (rel.holds ? "exact" : "fails") + " to q^8"};
}

Outcome c10() {
  std::string detail;
  bool ok = true;
  for (int k : {1, 3, 4}) {
    auto e2 = eisenstein_00(k, 5, 2, 15);
    auto e3 = eisenstein_00(k, 5, 3, 15);
    bool agree = e2.agrees_with(e3, Rat(15));
    ok = ok && agree;
    detail += "k=" + std::to_string(k) + (agree ? " agree" : " differ") +
              (e2.is_zero() ? " (both identically zero); " : "; ");
  }
  return {ok, detail + "c=5, to q^15"};
}

Outcome c11() {
  int checked = 0;
  for (const char* label : {"11a1", "37a1"}) {
    const auto& s = symbols(label);
    for (std::int64_t l : nt::primes_up_to(20)) {
      if (s.curve.is_bad(l)) continue;
      Rat al(static_cast<long>(testing::brute_ap(s.curve, l)));
      for (const EigenSymbol* e : {&s.plus, &s.minus}) {
        auto lhs = s.space->hecke_matrix(l).apply_left(e->functional);
        for (std::size_t j = 0; j < lhs.size(); ++j) {
          if (!(lhs[j] == al * e->functional[j])) {
            return {false, std::string(label) + " l=" + std::to_string(l)};
          }
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " (curve, sign, l) eigen checks"};
}

Outcome c12() {
  const std::int64_t p = 3, pk = 729;
  auto t = stabilize(cache("11a1"), p, 6, 4);
  auto base = iwasawa_invariants(t);
  auto by_p = iwasawa_invariants(t.scaled(ModInt(3, pk)));
  auto by_u = iwasawa_invariants(t.scaled(ModInt(2, pk)));
  bool ok = by_p.lambda == base.lambda && by_p.mu == base.mu + 1 &&
            by_u.lambda == base.lambda && by_u.mu == base.mu;
  // Synthetic tower with lambda = 1: images of sigma_4 - sigma_1.
  auto top = ModGroupRing::delta(81, 4, ModInt(1, pk)) - ModGroupRing::delta(81, 1, ModInt(1, pk));
  std::vector<ModGroupRing> layers;
  for (int n = 1; n <= 4; ++n) layers.push_back(top.project(nt::ipow(p, n)));
  auto syn = tower_from_layers(p, 6, layers);
  auto s0 = iwasawa_invariants(syn);
  auto sp = iwasawa_invariants(syn.scaled(ModInt(3, pk)));
  auto su = iwasawa_invariants(syn.scaled(ModInt(5, pk)));
  ok = ok && s0.lambda == 1 && s0.mu == 0 && sp.lambda == 1 && sp.mu == 1 &&
       su.lambda == 1 && su.mu == 0;
  for (int n = 3; n <= 4; ++n) {
    auto b = testing::binomial_expand(testing::tame_component(t.layer(n), p, pk), pk);
    auto [lambda, mu] = testing::newton_polygon(b, p);
    ok = ok && lambda == base.lambda && mu == base.mu;
  }
  return {ok, "11a1 p=3 k=6: (lambda, mu) = (" + std::to_string(base.lambda) + ", " +
                  std::to_string(base.mu) + "), scaled by p: (" + std::to_string(by_p.lambda) +
                  ", " + std::to_string(by_p.mu) + "); synthetic (1, 0) -> (" +
                  std::to_string(sp.lambda) + ", " + std::to_string(sp.mu) +
                  "); Newton polygon agrees at layers 3, 4"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rank dichotomy", 5, c1},
      {2, "period calibration", 10, c2},
      {3, "norm-relation adjudication", 120, c3},
      {4, "projective system", 120, c4},
      {5, "trivial-character interpolation", 0, c5},
      {6, "Kolyvagin telescoping", 10, c6},
      {7, "Gauss sums", 0, c7},
      {8, "Kurihara well-definedness", 300, c8},
      {9, "Siegel c-independence", 60, c9},
      {10, "Eisenstein a-independence", 120, c10},
      {11, "Hecke/eigen consistency", 0, c11},
      {12, "lambda/mu covariance", 0, c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2d  %-32s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
