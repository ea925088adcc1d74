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

#include "betti/qexp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "betti/errors.hpp"
#include "betti/kernels.hpp"
#include "betti/numtheory.hpp"

namespace betti {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

CycElt embed_to(const CycElt& x, long field) {
  return x.conductor() == field ? x : cyc_embed(x, field);
}

// Align ramification and coefficient field of two series.
std::pair<QSeries, QSeries> align(const QSeries& a, const QSeries& b) {
  long ram = std::lcm(a.ram(), b.ram());
  long field = std::lcm(a.field(), b.field());
  QSeries x = a, y = b;
  if (x.ram() != ram) x = x.with_ram(ram);
  if (y.ram() != ram) y = y.with_ram(ram);
  if (x.field() != field) x = x.with_field(field);
  if (y.field() != field) y = y.with_field(field);
  return {x, y};
}

// Accumulates polynomials in zeta_N per exponent, then converts to CycElt.
class ZetaAccumulator {
 public:
  ZetaAccumulator(long n, std::int64_t len)
      : n_(n), rows_(static_cast<std::size_t>(len)) {}
  void add(std::int64_t e, std::int64_t j, const Rat& v) {
    auto& row = rows_[static_cast<std::size_t>(e)];
    if (row.empty()) row.assign(static_cast<std::size_t>(n_), Rat(0));
    row[nt::mod(j, n_)] += v;
  }
  std::vector<CycElt> finish() const {
    std::vector<CycElt> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
      out.push_back(r.empty() ? CycElt(n_) : CycElt(n_, r));
    }
    return out;
  }

 private:
  long n_;
  std::vector<std::vector<Rat>> rows_;
};

void check_theta_args(const TorsionPoint& pt, long c, const char* who) {
  if (pt.is_zero()) {
    throw PreconditionError(std::string(who) + ": (alpha, beta) = (0, 0)");
  }
  if (c == 0 || nt::gcd(std::abs(c), 6 * pt.n) != 1) {
    throw PreconditionError(std::string(who) + ": gcd(c, 6N) != 1 for c = " +
                            std::to_string(c) + ", N = " + std::to_string(pt.n));
  }
}

long ram_of(const TorsionPoint& pt) { return pt.a == 0 ? 1 : static_cast<long>(pt.n); }

struct SiegelLead {
  long ram = 1;
  long field = 1;
  std::int64_t units = 0;  // leading exponent in units of 1/ram
  Rat exponent;            // exact, also when 12 does not divide c^2 - 1
  CycElt coeff;
  TorsionPoint shifted;    // t' with t^c = q^m t'
  std::int64_t m = 0;
};

SiegelLead siegel_lead(const TorsionPoint& pt, long c) {
  const std::int64_t n = pt.n;
  SiegelLead s;
  s.ram = ram_of(pt);
  s.field = static_cast<long>(n);
  const std::int64_t c2 = static_cast<std::int64_t>(c) * c;
  const std::int64_t e = (c - c2) / 2;
  const std::int64_t ca = c * pt.a;
  s.m = floor_div(ca, n);
  s.shifted = TorsionPoint::make(ca - s.m * n, c * pt.b, n);
  const std::int64_t a2 = s.shifted.a;
  // Exponent in units of 1/N.
  std::int64_t lead_n = n * ((c2 - 1) / 12) + pt.a * e + a2 * s.m + n * (s.m * (s.m - 1) / 2);
  s.units = lead_n / (n / s.ram);
  s.exponent = Rat(Int(static_cast<long>(c2 - 1)), Int(12)) +
               Rat(Int(static_cast<long>(pt.a * e + a2 * s.m)), Int(static_cast<long>(n))) +
               Rat(static_cast<long>(s.m * (s.m - 1) / 2));
  long sign = ((e + s.m) % 2 == 0) ? 1 : -1;
  s.coeff = CycElt::zeta(s.field, pt.b * e + s.shifted.b * s.m) * Rat(sign);
  if (pt.a == 0) {
    CycElt one = CycElt::from_rat(s.field, Rat(1));
    s.coeff = s.coeff * (one - CycElt::zeta(s.field, pt.b)).pow(c2) *
              (one - CycElt::zeta(s.field, s.shifted.b)).inverse();
  }
  return s;
}

// log of gamma(t) / (1 - t)^{[a = 0]} at t = zeta_N^b q^{a/N}, below q^{r/L}.
QSeries log_gamma_unit(const TorsionPoint& pt, long ram, std::int64_t r) {
  const long n = static_cast<long>(pt.n);
  ZetaAccumulator acc(n, std::max<std::int64_t>(r, 0));
  auto add_log = [&](std::int64_t ex, std::int64_t j) {
    for (std::int64_t k = 1; ex * k < r; ++k) {
      acc.add(ex * k, j * k, Rat(Int(-1), Int(static_cast<long>(k))));
    }
  };
  const std::int64_t shift = pt.a * ram / pt.n;  // a/N in units of 1/L
  if (pt.a != 0) add_log(shift, pt.b);
  for (std::int64_t k = 1; k * ram - shift < r; ++k) {
    add_log(k * ram + shift, pt.b);
    add_log(k * ram - shift, -pt.b);
  }
  return QSeries(ram, n, 0, acc.finish(), std::max<std::int64_t>(r, 0));
}

// exp of c^2 log gamma_u(t) - log gamma_u(t'), below q^{r/L}.
QSeries siegel_unit_part(const TorsionPoint& pt, long c, const SiegelLead& lead,
                         std::int64_t r) {
  const Rat c2(static_cast<long>(c) * c);
  QSeries lg = log_gamma_unit(pt, lead.ram, r).scaled(c2) -
               log_gamma_unit(lead.shifted, lead.ram, r);
  return lg.exp();
}

// Series with relative precision r (units of 1/L).
QSeries siegel_theta_rel(const TorsionPoint& pt, long c, std::int64_t r) {
  auto lead = siegel_lead(pt, c);
  QSeries unit = siegel_unit_part(pt, c, lead, r);
  std::vector<CycElt> coeffs(static_cast<std::size_t>(r), CycElt(lead.field));
  for (std::int64_t e = 0; e < r; ++e) coeffs[e] = lead.coeff * unit.coeff_units(e);
  return QSeries(lead.ram, lead.field, lead.units, std::move(coeffs), lead.units + r);
}

// Psi_k(t) = D^{k-1} Psi(t), Psi = t d/dt log gamma, at t = zeta_N^b q^{a/N}.
QSeries psi_series(const TorsionPoint& pt, int k, long ram, std::int64_t r) {
  const long n = static_cast<long>(pt.n);
  ZetaAccumulator acc(n, std::max<std::int64_t>(r, 0));
  auto mpow = [&](std::int64_t m) { return Rat(Int(static_cast<long>(m))).pow(k - 1); };
  const std::int64_t shift = pt.a * ram / pt.n;
  CycElt constant(n);
  if (pt.a == 0) {
    // D^{k-1}(t/(1-t)) = P_k(t) / (1-t)^k.
    std::vector<Rat> p{Rat(0), Rat(1)};
    for (int j = 1; j < k; ++j) {
      std::vector<Rat> next(p.size() + 1, Rat(0));
      for (std::size_t i = 1; i < p.size(); ++i) {
        Rat d = p[i] * Rat(static_cast<long>(i));  // coefficient of t^i in t P'
        next[i] += d;
        next[i + 1] -= d;
      }
      for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] += p[i] * Rat(j);
      p = std::move(next);
    }
    CycElt val(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_zero()) val += CycElt::zeta(n, pt.b * static_cast<long>(i)) * p[i];
    }
    CycElt denom = (CycElt::from_rat(n, Rat(1)) - CycElt::zeta(n, pt.b)).pow(k);
    constant = -(val * denom.inverse());
  } else {
    for (std::int64_t m = 1; m * shift < r; ++m) acc.add(m * shift, pt.b * m, -mpow(m));
  }
  for (std::int64_t j = 1; j * ram - shift < r; ++j) {
    for (std::int64_t m = 1; m * (j * ram - shift) < r; ++m) {
      if (m * (j * ram + shift) < r) acc.add(m * (j * ram + shift), pt.b * m, -mpow(m));
      Rat v = mpow(m);
      if ((k - 1) % 2 != 0) v = -v;  // (-m)^{k-1}
      acc.add(m * (j * ram - shift), -pt.b * m, v);
    }
  }
  QSeries s(ram, n, 0, acc.finish(), std::max<std::int64_t>(r, 0));
  if (!constant.is_zero() && r > 0) s = s.plus_constant(constant);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(long ram, long field, std::int64_t start, std::vector<CycElt> coeffs,
                 std::int64_t prec_units)
    : ram_(ram), field_(field), start_(start), coeffs_(std::move(coeffs)),
      prec_(prec_units) {
  if (ram < 1 || field < 1) throw PreconditionError("QSeries: ram and field must be >= 1");
  std::int64_t len = std::max<std::int64_t>(prec_ - start_, 0);
  coeffs_.resize(static_cast<std::size_t>(len), CycElt(field_));
  for (auto& c : coeffs_) c = embed_to(c, field_);
  normalize();
}

QSeries QSeries::zero(long ram, long field, std::int64_t prec_units) {
  return QSeries(ram, field, prec_units, {}, prec_units);
}

QSeries QSeries::monomial(long ram, long field, std::int64_t e, const CycElt& c,
                          std::int64_t prec_units) {
  return QSeries(ram, field, e, {c}, prec_units);
}

void QSeries::normalize() {
  std::size_t z = 0;
  while (z < coeffs_.size() && coeffs_[z].is_zero()) ++z;
  if (z == coeffs_.size()) {
    coeffs_.clear();
    start_ = prec_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
  start_ += static_cast<std::int64_t>(z);
}

Rat QSeries::lead_exponent() const {
  return Rat(Int(static_cast<long>(start_)), Int(ram_));
}

Rat QSeries::precision() const { return Rat(Int(static_cast<long>(prec_)), Int(ram_)); }

const CycElt& QSeries::lead_coeff() const {
  if (is_zero()) throw PreconditionError("QSeries: zero series has no leading term");
  return coeffs_.front();
}

CycElt QSeries::coeff_units(std::int64_t e) const {
  if (e >= prec_) {
    throw PrecisionError("QSeries: exponent " + Rat(Int(static_cast<long>(e)), Int(ram_)).to_string() +
                         " beyond precision " + precision().to_string());
  }
  if (e < start_) return CycElt(field_);
  return coeffs_[static_cast<std::size_t>(e - start_)];
}

CycElt QSeries::coeff(const Rat& x) const {
  Rat u = x * Rat(ram_);
  if (!u.is_integer()) {
    if (x >= precision()) throw PrecisionError("QSeries: exponent beyond precision");
    return CycElt(field_);
  }
  return coeff_units(u.num().get_si());
}

QSeries QSeries::with_ram(long ram) const {
  if (ram % ram_ != 0) {
    throw MismatchError("QSeries: ramification " + std::to_string(ram_) +
                        " does not divide " + std::to_string(ram));
  }
  const std::int64_t f = ram / ram_;
  if (is_zero()) return zero(ram, field_, prec_ * f);
  std::vector<CycElt> c(static_cast<std::size_t>((prec_ - start_) * f), CycElt(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * f] = coeffs_[i];
  return QSeries(ram, field_, start_ * f, std::move(c), prec_ * f);
}

QSeries QSeries::with_field(long field) const {
  QSeries r = *this;
  r.field_ = field;
  for (auto& c : r.coeffs_) c = cyc_embed(c, field);
  return r;
}

QSeries QSeries::truncated(std::int64_t prec_units) const {
  std::int64_t p = std::min(prec_units, prec_);
  std::vector<CycElt> c;
  for (std::int64_t e = start_; e < p; ++e) c.push_back(coeffs_[e - start_]);
  return QSeries(ram_, field_, std::min(start_, p), std::move(c), p);
}

QSeries operator+(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = align(a0, b0);
  std::int64_t prec = std::min(a.prec_, b.prec_);
  std::int64_t start = std::min(a.start_, b.start_);
  if (start >= prec) return QSeries::zero(a.ram_, a.field_, prec);
  std::vector<CycElt> c;
  c.reserve(static_cast<std::size_t>(prec - start));
  for (std::int64_t e = start; e < prec; ++e) c.push_back(a.coeff_units(e) + b.coeff_units(e));
  return QSeries(a.ram_, a.field_, start, std::move(c), prec);
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a0, const QSeries& b0) {
  auto [a, b] = align(a0, b0);
  std::int64_t prec = std::min(a.start_ + b.prec_, b.start_ + a.prec_);
  if (a.is_zero() || b.is_zero()) return QSeries::zero(a.ram_, a.field_, prec);
  std::int64_t start = a.start_ + b.start_;
  auto c = kernels::convolve_parallel(a.coeffs_, b.coeffs_,
                                      static_cast<std::size_t>(prec - start),
                                      CycElt(a.field_));
  return QSeries(a.ram_, a.field_, start, std::move(c), prec);
}

QSeries QSeries::scaled(const CycElt& s) const {
  auto [x, y] = cyc_common(CycElt(field_), s);
  QSeries r = x.conductor() == field_ ? *this : with_field(x.conductor());
  for (auto& c : r.coeffs_) c = c * y;
  r.normalize();
  return r;
}

QSeries QSeries::scaled(const Rat& s) const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c *= s;
  r.normalize();
  return r;
}

QSeries QSeries::plus_constant(const CycElt& c) const {
  return *this + monomial(ram_, std::lcm(field_, c.conductor()), 0,
                          embed_to(c, std::lcm(field_, c.conductor())), prec_);
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw PreconditionError("QSeries::inverse: zero series");
  const std::int64_t len = prec_ - start_;
  const CycElt u0 = coeffs_[0].inverse();
  std::vector<CycElt> g(static_cast<std::size_t>(len), CycElt(field_));
  g[0] = u0;
  for (std::int64_t i = 1; i < len; ++i) {
    CycElt s(field_);
    for (std::int64_t j = 1; j <= i && j < static_cast<std::int64_t>(coeffs_.size()); ++j) {
      if (coeffs_[j].is_zero()) continue;
      s += coeffs_[j] * g[i - j];
    }
    g[i] = -(s * u0);
  }
  return QSeries(ram_, field_, -start_, std::move(g), -start_ + len);
}

QSeries QSeries::log() const {
  if (is_zero() || start_ != 0 || !(coeffs_[0] == CycElt::from_rat(field_, Rat(1)))) {
    throw PreconditionError("QSeries::log: constant term must be 1");
  }
  std::vector<CycElt> d(coeffs_.size(), CycElt(field_));
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j] = coeffs_[j] * Rat(static_cast<long>(j));
  auto inv = inverse();
  auto q = kernels::convolve_parallel(d, inv.coeffs_, coeffs_.size(), CycElt(field_));
  q[0] = CycElt(field_);
  for (std::size_t e = 1; e < q.size(); ++e) q[e] *= Rat(Int(1), Int(static_cast<long>(e)));
  return QSeries(ram_, field_, 0, std::move(q), prec_);
}

QSeries QSeries::exp() const {
  if (!is_zero() && start_ <= 0) {
    throw PreconditionError("QSeries::exp: needs positive valuation");
  }
  const std::int64_t len = std::max<std::int64_t>(prec_, 0);
  std::vector<CycElt> g(static_cast<std::size_t>(len), CycElt(field_));
  if (len == 0) return QSeries(ram_, field_, 0, {}, 0);
  g[0] = CycElt::from_rat(field_, Rat(1));
  std::vector<CycElt> jh(static_cast<std::size_t>(len), CycElt(field_));
  for (std::int64_t j = start_; j < len; ++j) jh[j] = coeffs_[j - start_] * Rat(static_cast<long>(j));
  for (std::int64_t e = 1; e < len; ++e) {
    CycElt s(field_);
    for (std::int64_t j = std::max<std::int64_t>(start_, 1); j <= e; ++j) {
      if (jh[j].is_zero() || g[e - j].is_zero()) continue;
      s += jh[j] * g[e - j];
    }
    g[e] = s * Rat(Int(1), Int(static_cast<long>(e)));
  }
  return QSeries(ram_, field_, 0, std::move(g), prec_);
}

QSeries QSeries::pow(const Rat& r) const { return log().scaled(r).exp(); }

QSeries QSeries::unit_part() const {
  if (is_zero()) throw PreconditionError("QSeries::unit_part: zero series");
  const CycElt inv = coeffs_[0].inverse();
  std::vector<CycElt> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x * inv);
  return QSeries(ram_, field_, 0, std::move(c), prec_ - start_);
}

QSeries QSeries::pow_int(long n) const {
  if (is_zero()) {
    if (n <= 0) throw PreconditionError("QSeries::pow_int: zero series");
    return zero(ram_, field_, prec_ * n);
  }
  QSeries u = unit_part().pow(Rat(n));
  const CycElt lead = coeffs_[0].pow(n);
  std::vector<CycElt> c;
  c.reserve(u.coeffs_.size());
  for (std::int64_t e = 0; e < u.prec_; ++e) c.push_back(lead * u.coeff_units(e));
  return QSeries(ram_, field_, start_ * n, std::move(c), start_ * n + u.prec_);
}

QSeries QSeries::derivative() const {
  QSeries r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] *= Rat(Int(static_cast<long>(start_ + static_cast<std::int64_t>(i))), Int(ram_));
  }
  r.normalize();
  return r;
}

std::optional<QSeries> QSeries::rational_form() const {
  std::vector<CycElt> c;
  std::int64_t start = ceil_div(start_, ram_);
  std::int64_t prec = ceil_div(prec_, ram_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t e = start_ + static_cast<std::int64_t>(i);
    if (coeffs_[i].is_zero()) continue;
    if (e % ram_ != 0 || !coeffs_[i].is_rational()) return std::nullopt;
  }
  for (std::int64_t e = start; e < prec; ++e) {
    c.push_back(CycElt::from_rat(1, coeff_units(e * ram_).rational_value()));
  }
  return QSeries(1, 1, start, std::move(c), prec);
}

std::optional<Rat> first_difference(const QSeries& a0, const QSeries& b0, const Rat& upto) {
  auto [a, b] = align(a0, b0);
  if (a.precision() < upto || b.precision() < upto) {
    throw PrecisionError("first_difference: series known only to " +
                         std::min(a.precision(), b.precision()).to_string() + " < " +
                         upto.to_string());
  }
  Rat lim = upto * Rat(a.ram_);
  std::int64_t end = ceil_div(lim.num().get_si(), lim.den().get_si());
  for (std::int64_t e = std::min(a.start_, b.start_); e < end; ++e) {
    if (!(a.coeff_units(e) == b.coeff_units(e))) {
      return Rat(Int(static_cast<long>(e)), Int(a.ram_));
    }
  }
  return std::nullopt;
}

std::string QSeries::to_string() const {
  std::string s = "L=" + std::to_string(ram_) + " field=Q(z" + std::to_string(field_) +
                  ") lead=" + lead_exponent().to_string() + " prec=" + precision().to_string();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    s += "\n  q^" + Rat(Int(static_cast<long>(start_ + static_cast<std::int64_t>(i))), Int(ram_)).to_string() +
         ": " + coeffs_[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------- TorsionPoint

TorsionPoint TorsionPoint::make(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n < 1) throw PreconditionError("TorsionPoint: level must be >= 1");
  return TorsionPoint{nt::mod(a, n), nt::mod(b, n), n};
}

std::string TorsionPoint::to_string() const {
  return "(" + alpha().to_string() + ", " + beta().to_string() + ")";
}

// ------------------------------------------------------- Siegel units

QSeries siegel_theta_qexp(const TorsionPoint& pt, long c, std::int64_t prec) {
  check_theta_args(pt, c, "siegel_theta_qexp");
  auto lead = siegel_lead(pt, c);
  std::int64_t r = prec * lead.ram - lead.units;
  if (r <= 0) return QSeries::zero(lead.ram, lead.field, prec * lead.ram);
  return siegel_theta_rel(pt, c, r);
}

QSeries siegel_unit_qexp(const TorsionPoint& pt, long c, std::int64_t prec) {
  return siegel_theta_qexp(pt, c, prec);
}

std::string RationalizedG::tag() const {
  return "root_" + std::to_string(root_degree) + "(" + lead_power.to_string() + ") q^" +
         lead_exponent.to_string();
}

RationalizedG rationalized_g_qexp(const TorsionPoint& pt, std::int64_t prec, long c) {
  // Formal object: only c = 1 mod N is needed, not (c, 6) = 1.
  if (pt.is_zero()) throw PreconditionError("rationalized_g_qexp: (alpha, beta) = (0, 0)");
  if (c == 1 || c == -1) throw PreconditionError("rationalized_g_qexp: c = +-1");
  if (nt::mod(c, pt.n) != 1 % pt.n) {
    throw PreconditionError("rationalized_g_qexp: c = " + std::to_string(c) +
                            " is not 1 mod " + std::to_string(pt.n));
  }
  auto lead = siegel_lead(pt, c);
  RationalizedG g;
  g.root_degree = c * c - 1;
  g.lead_power = lead.coeff;
  g.lead_exponent = lead.exponent / Rat(g.root_degree);
  const Rat c2(static_cast<long>(c) * c);
  QSeries lg = log_gamma_unit(pt, lead.ram, prec * lead.ram).scaled(c2) -
               log_gamma_unit(lead.shifted, lead.ram, prec * lead.ram);
  g.unit = lg.scaled(Rat(Int(1), Int(g.root_degree))).exp();
  return g;
}

CRelationReport check_c_relation(const TorsionPoint& pt, long c, long d, std::int64_t prec) {
  check_theta_args(pt, c, "check_c_relation");
  check_theta_args(pt, d, "check_c_relation");
  const TorsionPoint cp = pt.times(c), dp = pt.times(d);
  const long ram = ram_of(pt);
  // Relative precision: every factor is known to q^prec beyond its leading term.
  const std::int64_t r = prec * ram;
  QSeries lhs = siegel_theta_rel(pt, d, r).pow_int(c * c) * siegel_theta_rel(cp, d, r).inverse();
  QSeries rhs = siegel_theta_rel(pt, c, r).pow_int(d * d) * siegel_theta_rel(dp, c, r).inverse();
  CRelationReport rep;
  rep.lhs_lead_exponent = lhs.lead_exponent();
  rep.rhs_lead_exponent = rhs.lead_exponent();
  Rat upto = std::min(lhs.lead_exponent(), rhs.lead_exponent()) + Rat(static_cast<long>(prec));
  rep.witness = first_difference(lhs, rhs, upto);
  rep.holds = !rep.witness.has_value();
  rep.checked_to = prec;
  return rep;
}

// ------------------------------------------------------ Eisenstein series

QSeries dlog_D_eisenstein(const TorsionPoint& pt, long c, int k, std::int64_t prec) {
  check_theta_args(pt, c, "dlog_D_eisenstein");
  if (k < 1) throw PreconditionError("dlog_D_eisenstein: k must be >= 1");
  auto lead = siegel_lead(pt, c);
  const std::int64_t r = prec * lead.ram;
  const Rat c2(static_cast<long>(c) * c);
  const Rat ck = Rat(static_cast<long>(c)).pow(k);
  QSeries s = psi_series(pt, k, lead.ram, r).scaled(c2) -
              psi_series(lead.shifted, k, lead.ram, r).scaled(ck);
  if (k == 1) {
    const std::int64_t e = (c - static_cast<std::int64_t>(c) * c) / 2;
    Rat constant(static_cast<long>(e + c * lead.m));
    if (!constant.is_zero() && r > 0) s = s.plus_constant(CycElt::from_rat(lead.field, constant));
  }
  return s;
}

QSeries eisenstein_00(int k, long c, long a, std::int64_t prec) {
  if (a <= 1) throw PreconditionError("eisenstein_00: a = " + std::to_string(a) + " (needs a >= 2)");
  if (nt::gcd(std::abs(c), 6 * a) != 1) {
    throw PreconditionError("eisenstein_00: gcd(c, 6a) != 1");
  }
  QSeries sum = QSeries::zero(static_cast<long>(a), static_cast<long>(a), prec * a);
  for (long x = 0; x < a; ++x) {
    for (long y = 0; y < a; ++y) {
      if (x == 0 && y == 0) continue;
      sum = sum + dlog_D_eisenstein(TorsionPoint::make(x, y, a), c, k, prec);
    }
  }
  Rat scale = Rat(1) / (Rat(a).pow(k) - Rat(1));
  auto rational = sum.scaled(scale).rational_form();
  if (!rational) throw std::runtime_error("eisenstein_00: sum is not defined over Q");
  return *rational;
}

long default_c(std::int64_t n) {
  for (long c = static_cast<long>(n) + 1;; c += static_cast<long>(n)) {
    if (c > 1 && nt::gcd(c, 6) == 1) return c;
  }
}

QSeries eisenstein_series(const TorsionPoint& pt, int k, std::int64_t prec) {
  if (k < 1) throw PreconditionError("eisenstein_series: k must be >= 1");
  if (k == 2) {
    throw PreconditionError("eisenstein_series: weight 2 needs the gated wp-type convention");
  }
  const long c = default_c(pt.n);
  const Rat denom = Rat(static_cast<long>(c) * c) - Rat(static_cast<long>(c)).pow(k);
  QSeries s = pt.is_zero() ? eisenstein_00(k, c, 2, prec) : dlog_D_eisenstein(pt, c, k, prec);
  return s.scaled(Rat(1) / denom);
}

QSeries f_series(int k, const TorsionPoint& pt, std::int64_t prec) {
  if (k == 2) throw PreconditionError("f_series: k = 2 is gated (wp-type convention unsourced)");
  if (k < 1) throw PreconditionError("f_series: k must be >= 1");
  const std::int64_t n = pt.n;
  QSeries sum = QSeries::zero(static_cast<long>(n), static_cast<long>(n), prec * n);
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      QSeries e = eisenstein_series(TorsionPoint::make(x, y, n), k, prec);
      sum = sum + e.scaled(CycElt::zeta(static_cast<long>(n), pt.b * x - pt.a * y));
    }
  }
  return sum.scaled(Rat(1) / Rat(static_cast<long>(n)).pow(k));
}

ZetaModularForm zeta_modular_form(std::int64_t m, std::int64_t n, int k, int r,
                                  int r_prime, std::int64_t prec, const Rat& constant) {
  auto fail = [](const std::string& why) {
    throw PreconditionError("zeta_modular_form: " + why);
  };
  if (m < 1 || n < 1) fail("M and N must be >= 1");
  if (k < 2) fail("k must be >= 2");
  if (r < 1 || r > k - 1) fail("r out of range [1, k-1]");
  if (r_prime < 1 || r_prime > k - 1) fail("r' out of range [1, k-1]");
  if (r != k - 1 && r_prime != k - 1) fail("neither r nor r' equals k-1");
  if (r == 2 && r_prime == k - 1) fail("(r, r') = (2, k-1) excluded");
  if (r == k - 1 && r_prime == 2) fail("(r, r') = (k-1, 2) excluded");
  if (r == k - 1 && r_prime == k - 2) fail("(r, r') = (k-1, k-2) excluded");
  if (r == k - 2 && r_prime == k - 1 && m < 2) fail("(r, r') = (k-2, k-1) requires M >= 2");
  const TorsionPoint p_m = TorsionPoint::make(1, 0, m);
  const TorsionPoint p_n = TorsionPoint::make(0, 1, n);
  ZetaModularForm z;
  if (r_prime == k - 1) {
    z.f_branch = (f_series(k - r, p_m, prec) * eisenstein_series(p_n, r, prec)).scaled(constant);
  }
  if (r == k - 1) {
    z.e_branch = (eisenstein_series(p_m, k - r_prime, prec) * eisenstein_series(p_n, r_prime, prec))
                     .scaled(constant);
  }
  return z;
}

}  // namespace betti
