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

// Exact arithmetic: rationals, residues with per-value modulus, and
// elements of cyclotomic fields in the power basis.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace betti {

using Int = mpz_class;

/// Reduced rational number with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(const Int& v) : v_(v) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { Rat r; r.v_ = -v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }
  Rat pow(long e) const;

  // "p/q", or "p" for integers.
  std::string to_string() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// p-adic valuation of a nonzero integer / rational.
int valuation(const Int& n, long p);
int valuation(const Rat& r, long p);

/// Residue class modulo a per-value modulus. Arithmetic between different
/// moduli throws MismatchError; use reduce_to() to coerce downward.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t value, std::int64_t modulus);
  static ModInt from_rat(const Rat& r, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const;

  ModInt& operator+=(const ModInt& o);
  ModInt& operator-=(const ModInt& o);
  ModInt& operator*=(const ModInt& o);
  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  ModInt operator-() const;
  ModInt scaled(std::int64_t c) const;

  ModInt inverse() const;
  ModInt pow(std::int64_t e) const;
  // Image under Z/mZ -> Z/m'Z; m' must divide m.
  ModInt reduce_to(std::int64_t new_modulus) const;

  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  std::string to_string() const;

 private:
  void check_same(const ModInt& o) const;

  std::int64_t value_ = 0;
  std::int64_t modulus_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ModInt& m);

// Coefficients of the L-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(long conductor);

/// Element of Q(zeta_L) as a polynomial in zeta_L of degree < phi(L).
class CycElt {
 public:
  CycElt() : CycElt(1) {}
  explicit CycElt(long conductor);
  CycElt(long conductor, std::vector<Rat> coeffs);
  static CycElt from_rat(long conductor, const Rat& r);
  // zeta_L^j, any integer j.
  static CycElt zeta(long conductor, long j);

  long conductor() const { return conductor_; }
  std::size_t degree() const { return coeffs_.size(); }
  std::span<const Rat> coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rat rational_value() const;
  // True when every power-basis coefficient is an integer (Z[zeta_L]).
  bool is_integral() const;
  // True when every coefficient is p-integral.
  bool is_p_integral(long p) const;

  CycElt& operator+=(const CycElt& o);
  CycElt& operator-=(const CycElt& o);
  CycElt& operator*=(const CycElt& o);
  CycElt& operator*=(const Rat& r);
  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  friend CycElt operator*(CycElt a, const Rat& r) { return a *= r; }
  friend CycElt operator*(const Rat& r, CycElt a) { return a *= r; }
  CycElt operator-() const;

  // Multiplicative inverse; throws PreconditionError on zero.
  CycElt inverse() const;
  CycElt pow(long e) const;
  // Galois action sigma_a : zeta -> zeta^a, gcd(a, L) = 1.
  CycElt galois(long a) const;
  // Complex conjugation (sigma_{-1}).
  CycElt conj() const { return galois(-1); }

  friend bool operator==(const CycElt& a, const CycElt& b);

  std::string to_string() const;

 private:
  long conductor_;
  std::vector<Rat> coeffs_;
};

CycElt cyc_mul(const CycElt& x, const CycElt& y);
// View x in Q(zeta_{new_conductor}); conductor of x must divide it.
CycElt cyc_embed(const CycElt& x, long new_conductor);
// Bring both operands to the lcm conductor.
std::pair<CycElt, CycElt> cyc_common(const CycElt& x, const CycElt& y);

std::ostream& operator<<(std::ostream& os, const CycElt& c);

// Unit root of X^2 - a_p X + p modulo p^k (p odd, p does not divide a_p).
ModInt hensel_unit_root(std::int64_t a_p, std::int64_t p, int k);

}  // namespace betti
