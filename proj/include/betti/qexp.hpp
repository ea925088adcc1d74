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

// Truncated q-expansions over cyclotomic fields: theta functions of the
// Tate curve, Siegel units, Eisenstein series and zeta modular forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betti/arith.hpp"

namespace betti {

/// sum_e c_e q^{e/L} for start <= e < prec (exponents in units of 1/L),
/// coefficients in Q(zeta_F). Normalized: the first stored coefficient is
/// nonzero, or the series is zero with start == prec.
class QSeries {
 public:
  QSeries() : QSeries(1, 1, 0, {}, 0) {}
  QSeries(long ram, long field, std::int64_t start, std::vector<CycElt> coeffs,
          std::int64_t prec_units);
  static QSeries zero(long ram, long field, std::int64_t prec_units);
  // c q^{e/L} + O(q^{prec/L}).
  static QSeries monomial(long ram, long field, std::int64_t e, const CycElt& c,
                          std::int64_t prec_units);

  long ram() const { return ram_; }
  long field() const { return field_; }
  std::int64_t start_units() const { return start_; }
  std::int64_t prec_units() const { return prec_; }
  Rat lead_exponent() const;
  Rat precision() const;
  bool is_zero() const { return coeffs_.empty(); }
  const CycElt& lead_coeff() const;
  // Coefficient of q^{e/L}; zero below start. Throws past the precision.
  CycElt coeff_units(std::int64_t e) const;
  // Coefficient of q^x for rational x.
  CycElt coeff(const Rat& x) const;
  const std::vector<CycElt>& coeffs() const { return coeffs_; }

  QSeries with_ram(long ram) const;
  QSeries with_field(long field) const;
  QSeries truncated(std::int64_t prec_units) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  // Precision of a product: min(v(a) + O(b), v(b) + O(a)).
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  QSeries scaled(const CycElt& s) const;
  QSeries scaled(const Rat& s) const;
  // Adds a constant (requires precision > 0).
  QSeries plus_constant(const CycElt& c) const;

  QSeries inverse() const;
  // Series with constant term 1 only.
  QSeries log() const;
  // Series with positive valuation only.
  QSeries exp() const;
  // f^r for f with constant term 1.
  QSeries pow(const Rat& r) const;
  // lead^n q^{n v} (unit part)^n, any nonzero f.
  QSeries pow_int(long n) const;
  // f divided by its leading monomial.
  QSeries unit_part() const;
  // D = q d/dq.
  QSeries derivative() const;
  // True when every coefficient is rational and every exponent integral;
  // then returns the series over Q with L = 1.
  std::optional<QSeries> rational_form() const;

  // First exponent below upto where a and b differ; nullopt if none.
  // Throws if either series is not known to upto.
  friend std::optional<Rat> first_difference(const QSeries& a, const QSeries& b,
                                             const Rat& upto);
  bool agrees_with(const QSeries& o, const Rat& upto) const {
    return !first_difference(*this, o, upto).has_value();
  }

  std::string to_string() const;

 private:
  void normalize();

  long ram_;
  long field_;
  std::int64_t start_;
  std::vector<CycElt> coeffs_;
  std::int64_t prec_;
};

/// (alpha, beta) = (a/N, b/N) with 0 <= a, b < N.
struct TorsionPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t n = 1;

  static TorsionPoint make(std::int64_t a, std::int64_t b, std::int64_t n);
  bool is_zero() const { return a == 0 && b == 0; }
  TorsionPoint times(std::int64_t c) const { return make(c * a, c * b, n); }
  Rat alpha() const { return Rat(Int(static_cast<long>(a)), Int(static_cast<long>(n))); }
  Rat beta() const { return Rat(Int(static_cast<long>(b)), Int(static_cast<long>(n))); }
  std::string to_string() const;
};

/// Pullback of c-theta along t = zeta_N^b q^{a/N}:
///   q^{(c^2-1)/12} (-t)^{(c-c^2)/2} gamma(t)^{c^2} gamma(t^c)^{-1},
/// gamma(t) = (1-t) prod_{n>=1} (1-q^n t)(1-q^n/t). Known below q^prec.
QSeries siegel_theta_qexp(const TorsionPoint& pt, long c, std::int64_t prec);
QSeries siegel_unit_qexp(const TorsionPoint& pt, long c, std::int64_t prec);

/// g_{alpha,beta} = (c-g)^{1/(c^2-1)}: unit part as a series, leading data
/// kept as a formal root.
struct RationalizedG {
  QSeries unit;            // constant term 1, known below q^prec
  Rat lead_exponent;       // exponent of c-g divided by c^2 - 1
  CycElt lead_power;       // leading coefficient of c-g
  long root_degree = 1;    // c^2 - 1
  std::string tag() const;
};
RationalizedG rationalized_g_qexp(const TorsionPoint& pt, std::int64_t prec, long c);

struct CRelationReport {
  bool holds = false;
  Rat lhs_lead_exponent;
  Rat rhs_lead_exponent;
  std::optional<Rat> witness;  // first differing exponent
  std::int64_t checked_to = 0;  // relative to the leading exponent
};
/// (d-g_{P})^{c^2} (d-g_{cP})^{-1} == (c-g_{P})^{d^2} (c-g_{dP})^{-1}.
CRelationReport check_c_relation(const TorsionPoint& pt, long c, long d,
                                 std::int64_t prec);

/// D^{k-1} dlog(c-theta) pulled back: delta_{k1} e + c^2 Psi_k(t) - c^k Psi_k(t^c).
QSeries dlog_D_eisenstein(const TorsionPoint& pt, long c, int k, std::int64_t prec);

/// (a^k - 1)^{-1} sum over nonzero (alpha, beta) in ((1/a)Z/Z)^2 of
/// c-E^(k)_{alpha,beta}; returned over Q.
QSeries eisenstein_00(int k, long c, long a, std::int64_t prec);

// Smallest c > 1 with c = 1 mod n and gcd(c, 6) = 1.
long default_c(std::int64_t n);

/// E^(k)_{alpha,beta} = c-E^(k) / (c^2 - c^k) with c = 1 mod N; k != 2.
QSeries eisenstein_series(const TorsionPoint& pt, int k, std::int64_t prec);

/// F^(k)_{alpha,beta} = N^{-k} sum_{x,y} E^(k)_{x/N,y/N} zeta_N^{bx - ay}; k != 2.
QSeries f_series(int k, const TorsionPoint& pt, std::int64_t prec);

struct ZetaModularForm {
  std::optional<QSeries> f_branch;  // r' = k-1: F^(k-r)_{1/M,0} E^(r)_{0,1/N}
  std::optional<QSeries> e_branch;  // r = k-1:  E^(k-r')_{1/M,0} E^(r')_{0,1/N}
};
ZetaModularForm zeta_modular_form(std::int64_t m, std::int64_t n, int k, int r,
                                  int r_prime, std::int64_t prec,
                                  const Rat& constant = Rat(1));

}  // namespace betti
