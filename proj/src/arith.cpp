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

#include "betti/arith.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "betti/errors.hpp"
#include "betti/numtheory.hpp"

namespace betti {

Rat::Rat(const Int& num, const Int& den) : v_(num, den) {
  if (den == 0) throw PreconditionError("Rat: zero denominator");
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw PreconditionError("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const { return Rat(1) / *this; }

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rat r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Rat::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.to_string();
}

int valuation(const Int& n, long p) {
  if (n == 0) throw PreconditionError("valuation of zero");
  Int m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& r, long p) {
  return valuation(r.num(), p) - valuation(r.den(), p);
}

// ---------------------------------------------------------------- ModInt

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus <= 0) throw PreconditionError("ModInt: modulus must be positive");
  value_ = nt::mod(value, modulus);
}

ModInt ModInt::from_rat(const Rat& r, std::int64_t modulus) {
  Int m(static_cast<long>(modulus));
  Int d = r.den();
  Int g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  if (g != 1) {
    throw PrecisionError("ModInt: denominator of " + r.to_string() +
                         " is not invertible mod " + std::to_string(modulus));
  }
  Int n = r.num() % m;
  Int dm = d % m;
  ModInt num(n.get_si(), modulus);
  ModInt den(dm.get_si(), modulus);
  return num * den.inverse();
}

bool ModInt::is_unit() const { return nt::gcd(value_, modulus_) == 1; }

void ModInt::check_same(const ModInt& o) const {
  if (modulus_ != o.modulus_) {
    throw MismatchError("ModInt: modulus mismatch " + std::to_string(modulus_) +
                        " vs " + std::to_string(o.modulus_));
  }
}

ModInt& ModInt::operator+=(const ModInt& o) {
  check_same(o);
  value_ += o.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) {
  check_same(o);
  value_ -= o.value_;
  if (value_ < 0) value_ += modulus_;
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& o) {
  check_same(o);
  value_ = nt::mulmod(value_, o.value_, modulus_);
  return *this;
}

ModInt ModInt::operator-() const { return ModInt(-value_, modulus_); }

ModInt ModInt::scaled(std::int64_t c) const {
  return ModInt(nt::mulmod(value_, nt::mod(c, modulus_), modulus_), modulus_);
}

ModInt ModInt::inverse() const {
  return ModInt(nt::invmod(value_, modulus_), modulus_);
}

ModInt ModInt::pow(std::int64_t e) const {
  return ModInt(nt::powmod(value_, e, modulus_), modulus_);
}

ModInt ModInt::reduce_to(std::int64_t new_modulus) const {
  if (new_modulus <= 0 || modulus_ % new_modulus != 0) {
    throw MismatchError("ModInt: cannot reduce mod " + std::to_string(modulus_) +
                        " to mod " + std::to_string(new_modulus));
  }
  return ModInt(value_, new_modulus);
}

std::string ModInt::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

std::ostream& operator<<(std::ostream& os, const ModInt& m) {
  return os << m.to_string();
}

// ---------------------------------------------------------------- CycElt

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num,
                                    const std::vector<long>& den) {
  // den is monic; returns num / den, which must divide exactly.
  std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// Fold exponents modulo L, then reduce modulo the monic Phi_L.
std::vector<Rat> reduce_poly(long conductor, std::vector<Rat> poly) {
  const auto& phi = cyclotomic_polynomial(conductor);
  std::size_t deg = phi.size() - 1;
  if (poly.size() > static_cast<std::size_t>(conductor)) {
    for (std::size_t i = conductor; i < poly.size(); ++i) {
      if (!poly[i].is_zero()) poly[i % conductor] += poly[i];
    }
    poly.resize(conductor);
  }
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i].is_zero()) continue;
    Rat c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * Rat(phi[j]);
    }
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long conductor) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  if (conductor <= 0) {
    throw PreconditionError("cyclotomic_polynomial: conductor must be positive");
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  // Divisors in increasing order: Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
  for (long d = 1; d <= conductor; ++d) {
    if (conductor % d != 0 || cache.count(d)) continue;
    std::vector<long> q(d + 1, 0);
    q[0] = -1;
    q[d] = 1;
    for (long e = 1; e < d; ++e) {
      if (d % e == 0) q = poly_divide_exact(q, cache.at(e));
    }
    cache.emplace(d, std::move(q));
  }
  return cache.at(conductor);
}

CycElt::CycElt(long conductor)
    : conductor_(conductor),
      coeffs_(cyclotomic_polynomial(conductor).size() - 1) {}

CycElt::CycElt(long conductor, std::vector<Rat> coeffs)
    : conductor_(conductor), coeffs_(reduce_poly(conductor, std::move(coeffs))) {
  coeffs_.resize(cyclotomic_polynomial(conductor).size() - 1);
}

CycElt CycElt::from_rat(long conductor, const Rat& r) {
  CycElt c(conductor);
  c.coeffs_[0] = r;
  return c;
}

CycElt CycElt::zeta(long conductor, long j) {
  long e = nt::mod(j, conductor);
  std::vector<Rat> poly(e + 1);
  poly[e] = Rat(1);
  return CycElt(conductor, std::move(poly));
}

bool CycElt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycElt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rat CycElt::rational_value() const {
  if (!is_rational()) throw PreconditionError("CycElt: value is not rational");
  return coeffs_[0];
}

bool CycElt::is_integral() const {
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

bool CycElt::is_p_integral(long p) const {
  for (const auto& c : coeffs_) {
    if (mpz_divisible_ui_p(c.den().get_mpz_t(), p)) return false;
  }
  return true;
}

CycElt& CycElt::operator+=(const CycElt& o) {
  if (o.conductor_ != conductor_) throw MismatchError("CycElt: conductor mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& o) {
  if (o.conductor_ != conductor_) throw MismatchError("CycElt: conductor mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycElt& CycElt::operator*=(const CycElt& o) { return *this = *this * o; }

CycElt& CycElt::operator*=(const Rat& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycElt operator*(const CycElt& a, const CycElt& b) {
  if (a.conductor_ != b.conductor_) {
    throw MismatchError("CycElt: conductor mismatch " +
                        std::to_string(a.conductor_) + " vs " +
                        std::to_string(b.conductor_));
  }
  std::size_t n = a.coeffs_.size();
  std::vector<Rat> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycElt(a.conductor_, std::move(prod));
}

CycElt CycElt::operator-() const {
  CycElt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycElt CycElt::inverse() const {
  if (is_zero()) throw PreconditionError("CycElt: inverse of zero");
  std::size_t n = coeffs_.size();
  if (is_rational()) return from_rat(conductor_, coeffs_[0].inverse());
  // Solve (multiplication-by-this matrix) * y = e_0.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  CycElt basis(conductor_);
  for (std::size_t j = 0; j < n; ++j) {
    CycElt col = *this * zeta(conductor_, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][n] = Rat(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    std::swap(m[c], m[piv]);
    Rat inv = m[c][c].inverse();
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rat> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = m[i][n];
  return CycElt(conductor_, std::move(y));
}

CycElt CycElt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycElt r = from_rat(conductor_, Rat(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

CycElt CycElt::galois(long a) const {
  if (nt::gcd(a, conductor_) != 1) {
    throw PreconditionError("CycElt::galois: exponent not coprime to conductor");
  }
  std::vector<Rat> poly(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    poly[nt::mod(static_cast<long>(i) * a, conductor_)] += coeffs_[i];
  }
  return CycElt(conductor_, std::move(poly));
}

bool operator==(const CycElt& a, const CycElt& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  auto [x, y] = cyc_common(a, b);
  return x.coeffs_ == y.coeffs_;
}

std::string CycElt::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].to_string();
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycElt& c) {
  return os << c.to_string();
}

CycElt cyc_mul(const CycElt& x, const CycElt& y) { return x * y; }

CycElt cyc_embed(const CycElt& x, long new_conductor) {
  if (new_conductor <= 0 || new_conductor % x.conductor() != 0) {
    throw MismatchError("cyc_embed: conductor " + std::to_string(x.conductor()) +
                        " does not divide " + std::to_string(new_conductor));
  }
  if (new_conductor == x.conductor()) return x;
  long step = new_conductor / x.conductor();
  std::vector<Rat> poly(new_conductor);
  for (std::size_t i = 0; i < x.degree(); ++i) poly[i * step] = x[i];
  return CycElt(new_conductor, std::move(poly));
}

std::pair<CycElt, CycElt> cyc_common(const CycElt& x, const CycElt& y) {
  long l = nt::lcm(x.conductor(), y.conductor());
  return {cyc_embed(x, l), cyc_embed(y, l)};
}

ModInt hensel_unit_root(std::int64_t a_p, std::int64_t p, int k) {
  if (p < 3 || !nt::is_prime(p)) {
    throw PreconditionError("hensel_unit_root: p must be an odd prime");
  }
  if (k < 1) throw PreconditionError("hensel_unit_root: precision must be >= 1");
  if (nt::mod(a_p, p) == 0) {
    throw NonOrdinaryError("non-ordinary prime: p = " + std::to_string(p) +
                           " divides a_p = " + std::to_string(a_p));
  }
  // Roots of X^2 - a_p X + p mod p by exhaustive search; the unit one.
  std::int64_t root = -1;
  for (std::int64_t x = 1; x < p; ++x) {
    if (nt::mod(x * x - a_p * x + p, p) == 0) {
      root = x;
      break;
    }
  }
  std::int64_t modulus = p;
  for (int e = 1; e < k; ++e) {
    modulus *= p;
    // Newton step x <- x - f(x)/f'(x) modulo the next power.
    std::int64_t f = nt::mod(nt::mulmod(root, root, modulus) -
                                 nt::mulmod(a_p, root, modulus) + p,
                             modulus);
    std::int64_t df = nt::mod(2 * root - a_p, modulus);
    root = nt::mod(root - nt::mulmod(f, nt::invmod(df, modulus), modulus),
                   modulus);
  }
  return ModInt(root, modulus);
}

}  // namespace betti
