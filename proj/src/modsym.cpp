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

#include "betti/modsym.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "betti/errors.hpp"
#include "betti/numeric_oracle.hpp"
#include "betti/numtheory.hpp"

namespace betti {

namespace {

std::int64_t to_residue(const Int& v, std::int64_t n) {
  Int r = v % Int(static_cast<long>(n));
  if (r < 0) r += n;
  return r.get_si();
}

}  // namespace

ModularSymbolSpace::ModularSymbolSpace(std::int64_t level) : level_(level) {
  const std::int64_t n = level;
  lookup_.assign(static_cast<std::size_t>(n * n), -1);
  auto units = nt::units_mod(n);
  // Canonical representative: lexicographically least scalar multiple.
  for (std::int64_t c = 0; c < n; ++c) {
    for (std::int64_t d = 0; d < n; ++d) {
      if (nt::gcd(nt::gcd(c, d), n) != 1) continue;
      if (lookup_[c * n + d] >= 0) continue;
      auto best = std::make_pair(c, d);
      for (auto u : units) {
        auto cand = std::make_pair(nt::mulmod(u, c, n), nt::mulmod(u, d, n));
        best = std::min(best, cand);
      }
      std::int32_t idx;
      auto bi = best.first * n + best.second;
      if (lookup_[bi] < 0) {
        lookup_[bi] = static_cast<std::int32_t>(symbols_.size());
        symbols_.push_back(best);
      }
      idx = lookup_[bi];
      for (auto u : units) {
        lookup_[nt::mulmod(u, c, n) * n + nt::mulmod(u, d, n)] = idx;
      }
    }
  }
  if (n == 1) {
    lookup_.assign(1, 0);
    symbols_ = {{0, 0}};
  }

  const std::size_t m = symbols_.size();
  Matrix rel(2 * m, m);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = s_relation(i);
    rel(row, a) += Rat(1);
    rel(row, b) += Rat(1);
    ++row;
    auto t = tau_relation(i);
    for (auto k : t) rel(row, k) += Rat(1);
    ++row;
  }
  auto pivots = rel.rref();
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> position(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (!is_pivot[j]) {
      position[j] = basis_.size();
      basis_.push_back(j);
    }
  }
  coords_.assign(m, std::vector<Rat>(basis_.size()));
  for (std::size_t j = 0; j < m; ++j) {
    if (!is_pivot[j]) coords_[j][position[j]] = Rat(1);
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto p = pivots[r];
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      coords_[p][k] = -rel(r, basis_[k]);
    }
  }
}

std::shared_ptr<const ModularSymbolSpace> ModularSymbolSpace::build(
    std::int64_t level) {
  if (level < 1) throw PreconditionError("build_space: level must be >= 1");
  return std::shared_ptr<const ModularSymbolSpace>(new ModularSymbolSpace(level));
}

std::size_t ModularSymbolSpace::index_of(std::int64_t c, std::int64_t d) const {
  const std::int64_t n = level_;
  if (n == 1) return 0;
  std::int32_t idx = lookup_[nt::mod(c, n) * n + nt::mod(d, n)];
  if (idx < 0) {
    throw PreconditionError("index_of: (" + std::to_string(c) + ":" +
                            std::to_string(d) + ") is not in P^1(Z/" +
                            std::to_string(n) + ")");
  }
  return static_cast<std::size_t>(idx);
}

std::pair<std::size_t, std::size_t> ModularSymbolSpace::s_relation(
    std::size_t i) const {
  auto [c, d] = symbols_[i];
  return {i, index_of(d, -c)};
}

std::array<std::size_t, 3> ModularSymbolSpace::tau_relation(std::size_t i) const {
  auto [c, d] = symbols_[i];
  return {i, index_of(d, -c - d), index_of(-c - d, c)};
}

std::vector<std::array<std::int64_t, 4>> heilbronn_matrices(std::int64_t n) {
  std::vector<std::array<std::int64_t, 4>> out;
  // a + d <= n + 1 follows from bc <= (a-1)(d-1).
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t d = 1; a + d <= n + 1; ++d) {
      std::int64_t ad = a * d;
      if (ad < n) continue;
      std::int64_t bc = ad - n;
      if (bc == 0) {
        for (std::int64_t b = 0; b < a; ++b) {
          if (b == 0) {
            for (std::int64_t c = 0; c < d; ++c) out.push_back({a, 0, c, d});
          } else {
            out.push_back({a, b, 0, d});
          }
        }
        continue;
      }
      for (std::int64_t b = 1; b < a; ++b) {
        if (bc % b != 0) continue;
        std::int64_t c = bc / b;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

const Matrix& ModularSymbolSpace::hecke_matrix(std::int64_t l) const {
  if (!nt::is_prime(l)) {
    throw PreconditionError("hecke_operator: " + std::to_string(l) + " is not prime");
  }
  if (level_ % l == 0) {
    throw PreconditionError("hecke_operator: l = " + std::to_string(l) +
                            " divides the level (U_l unsupported)");
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = hecke_.find(l);
    if (it != hecke_.end()) return it->second;
  }
  const auto heil = heilbronn_matrices(l);
  const std::size_t dim = basis_.size();
  Matrix t(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto [c, d] = symbols_[basis_[j]];
    for (const auto& h : heil) {
      std::size_t k = index_of(c * h[0] + d * h[2], c * h[1] + d * h[3]);
      const auto& v = coords_[k];
      for (std::size_t i = 0; i < dim; ++i) {
        if (!v[i].is_zero()) t(i, j) += v[i];
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return hecke_.emplace(l, std::move(t)).first->second;
}

const Matrix& ModularSymbolSpace::star_matrix() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (star_) return *star_;
  const std::size_t dim = basis_.size();
  Matrix s(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto [c, d] = symbols_[basis_[j]];
    const auto& v = coords_[index_of(-c, d)];
    for (std::size_t i = 0; i < dim; ++i) s(i, j) = v[i];
  }
  star_ = std::move(s);
  return *star_;
}

std::vector<ManinTerm> ModularSymbolSpace::path_from_infinity(const Cusp& r) const {
  std::vector<ManinTerm> out;
  if (r.is_infinity()) return out;
  Int p = r.num, q = r.den;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // Convergents p_k/q_k; each step {p_{k-1}/q_{k-1}, p_k/q_k} is g{0, oo}
  // for g with bottom row (q_k, +-q_{k-1}).
  Int pm1 = 1, qm1 = 0, pk, qk;
  Int num = p, den = q;
  bool first = true;
  Int ppm1 = 0, pqm1 = 0;  // unused placeholders for clarity of recurrence
  (void)ppm1;
  (void)pqm1;
  Int pm2 = 0, qm2 = 1;
  while (true) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (first) {
      pk = a;
      qk = 1;
      first = false;
    } else {
      pk = a * pm1 + pm2;
      qk = a * qm1 + qm2;
    }
    Int det = pk * qm1 - pm1 * qk;
    std::int64_t c = to_residue(qk, level_);
    std::int64_t d = to_residue(det > 0 ? qm1 : Int(-qm1), level_);
    out.push_back({index_of(c, d), 1});
    pm2 = pm1;
    qm2 = qm1;
    pm1 = pk;
    qm1 = qk;
    Int rem = num - a * den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return out;
}

std::vector<Rat> ModularSymbolSpace::path_coords(const Cusp& alpha,
                                                 const Cusp& beta) const {
  std::vector<Rat> v(basis_.size());
  for (auto t : path_from_infinity(beta)) {
    const auto& c = coords_[t.index];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!c[i].is_zero()) v[i] += Rat(t.sign) * c[i];
    }
  }
  for (auto t : path_from_infinity(alpha)) {
    const auto& c = coords_[t.index];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!c[i].is_zero()) v[i] -= Rat(t.sign) * c[i];
    }
  }
  return v;
}

const char* to_string(ScalingMode m) {
  return m == ScalingMode::kIntegral ? "integral" : "period-calibrated";
}

EigenSymbol EigenSymbol::with_calibration(const Rat& lambda) const {
  EigenSymbol e = *this;
  e.mode = ScalingMode::kPeriodCalibrated;
  e.calibration = lambda;
  return e;
}

EigenSymbol EigenSymbol::integral() const {
  EigenSymbol e = *this;
  e.mode = ScalingMode::kIntegral;
  return e;
}

EigenSymbol eigen_symbol(std::shared_ptr<const ModularSymbolSpace> space,
                         const CurveData& curve, int sign) {
  if (curve.conductor != space->level()) {
    throw PreconditionError("eigen_symbol: conductor " +
                            std::to_string(curve.conductor) +
                            " differs from level " + std::to_string(space->level()));
  }
  if (sign != 1 && sign != -1) throw PreconditionError("eigen_symbol: sign must be +-1");
  const std::size_t dim = space->dimension();
  Matrix system;
  for (auto l : nt::primes_up_to(kEigenPrimeBound)) {
    if (curve.is_bad(l)) continue;
    Matrix block = space->hecke_matrix(l).transpose() -
                   Matrix::identity(dim).scaled(Rat(count_points(curve, l)));
    system.append_rows(block);
  }
  system.append_rows(space->star_matrix().transpose() -
                     Matrix::identity(dim).scaled(Rat(sign)));
  auto ker = system.kernel();
  if (ker.size() != 1) {
    throw PreconditionError("eigen_symbol: not new / ambiguous (eigenspace dimension " +
                            std::to_string(ker.size()) + ") for " + curve.label);
  }
  EigenSymbol e;
  e.space = space;
  e.sign = sign;
  std::vector<Rat> values(space->num_symbols());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& c = space->coords(i);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!c[k].is_zero()) values[i] += c[k] * ker[0][k];
    }
  }
  // Clear denominators, then divide out the content.
  Int den = 1, content = 0;
  for (const auto& v : values) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den().get_mpz_t());
  }
  for (const auto& v : values) {
    Int w = v.num() * (den / v.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_mpz_t());
  }
  Rat scale = Rat(den, content);
  int orient = 0;
  if (sign == 1) {
    for (auto t : space->path_from_infinity(Cusp::from(Rat(0)))) {
      (void)t;
    }
    Rat at_zero;
    for (auto t : space->path_from_infinity(Cusp::from(Rat(0)))) {
      at_zero += Rat(t.sign) * values[t.index];
    }
    orient = at_zero.sign();
  }
  if (orient == 0) {
    for (const auto& v : values) {
      if (!v.is_zero()) {
        orient = v.sign();
        break;
      }
    }
  }
  if (orient < 0) scale = -scale;
  e.functional = ker[0];
  for (auto& f : e.functional) f *= scale;
  e.manin_values.reserve(values.size());
  for (const auto& v : values) e.manin_values.push_back((v * scale).num());
  return e;
}

Rat symbol_value(const EigenSymbol& eigen, const Rat& r) {
  Int acc = 0;
  for (auto t : eigen.space->path_from_infinity(Cusp::from(r))) {
    if (t.sign > 0) {
      acc += eigen.manin_values[t.index];
    } else {
      acc -= eigen.manin_values[t.index];
    }
  }
  return Rat(acc) * eigen.scale();
}

Rat symbol_value_at_infinity(const EigenSymbol&) { return Rat(0); }

Rat pairing(const EigenSymbol& eigen, const std::vector<Rat>& path_coords) {
  Rat acc;
  for (std::size_t i = 0; i < path_coords.size(); ++i) {
    if (!path_coords[i].is_zero()) acc += eigen.functional[i] * path_coords[i];
  }
  return acc * eigen.scale();
}

std::int64_t cusps_x0(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) c += nt::euler_phi(nt::gcd(d, n / d));
  }
  return c;
}

std::int64_t genus_x0(std::int64_t n) {
  // g = 1 + mu/12 - nu2/4 - nu3/3 - c/2.
  std::int64_t mu = n;
  for (auto [p, e] : nt::factorize(n)) mu = mu / p * (p + 1);
  std::int64_t nu2 = 0, nu3 = 0;
  if (n % 4 != 0) {
    nu2 = 1;
    for (auto [p, e] : nt::factorize(n)) {
      nu2 *= (p == 2) ? 1 : (1 + nt::legendre(-1, p));
    }
  }
  if (n % 9 != 0) {
    nu3 = 1;
    for (auto [p, e] : nt::factorize(n)) {
      nu3 *= (p == 3) ? 1 : (1 + (p == 2 ? -1 : nt::legendre(-3 + 3 * p, p)));
    }
  }
  std::int64_t c = cusps_x0(n);
  std::int64_t twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * c;
  return twelve_g / 12;
}

Calibration calibrate_periods(const EigenSymbol& eigen, const CurveData& curve) {
  if (eigen.sign != 1) throw PreconditionError("calibrate_periods: needs the + symbol");
  Calibration out;
  Rat zero_value = symbol_value(eigen.integral(), Rat(0));
  auto lv = oracle::lvalue_at_one(curve);
  double omega = oracle::real_period(curve);
  out.numeric_ratio = lv.value / omega;
  bool l_vanishes = std::abs(lv.value) <= 1e-8 + lv.tail_bound;
  if (zero_value.is_zero()) {
    if (!l_vanishes) {
      throw PreconditionError("calibrate_periods: [0]^+ = 0 but L(E,1) = " +
                              std::to_string(lv.value) + " (inconsistent data)");
    }
    out.note = "calibration undetermined at r=0";
    return out;
  }
  if (l_vanishes) {
    throw PreconditionError("calibrate_periods: [0]^+ != 0 but L(E,1) vanishes numerically");
  }
  double target = out.numeric_ratio / zero_value.to_double();
  // Continued-fraction convergents of the target until 1e-6 relative match.
  double x = target;
  Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(x);
    Int ai(static_cast<long>(a));
    Int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (abs(h1) > 1000000 || k1 > 1000000) break;
    Rat cand(h1, k1);
    double rel = std::abs(cand.to_double() - target) / std::abs(target);
    if (rel < 1e-6) {
      out.determined = true;
      out.lambda = cand;
      out.relative_error = rel;
      out.note = "lambda * [0]^+ = " + (cand * zero_value).to_string();
      return out;
    }
    double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  throw PreconditionError("calibrate_periods: no small rational matches L/Omega = " +
                          std::to_string(out.numeric_ratio));
}

CurveSymbols curve_symbols(const CurveData& curve) {
  CurveSymbols s;
  s.curve = curve;
  s.space = ModularSymbolSpace::build(curve.conductor);
  s.plus = eigen_symbol(s.space, curve, 1);
  s.minus = eigen_symbol(s.space, curve, -1);
  return s;
}

}  // namespace betti
