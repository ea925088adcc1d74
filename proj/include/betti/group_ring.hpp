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

// Group rings R[(Z/mZ)^x] with a -> sigma_a, and Dirichlet characters.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "betti/arith.hpp"
#include "betti/errors.hpp"
#include "betti/numtheory.hpp"

namespace betti {

/// Sorted units of Z/mZ with a residue -> position table. Shared and cached.
struct UnitGroup {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> units;
  std::vector<std::int32_t> position;  // length m, -1 for non-units

  std::size_t size() const { return units.size(); }
  std::size_t index(std::int64_t a) const;
};

std::shared_ptr<const UnitGroup> unit_group(std::int64_t m);

inline Rat ring_zero(const Rat&) { return Rat(0); }
inline ModInt ring_zero(const ModInt& x) { return ModInt(0, x.modulus()); }
inline CycElt ring_zero(const CycElt& x) { return CycElt(x.conductor()); }

/// Dense element sum_a x_a sigma_a of R[(Z/mZ)^x]. The zero prototype fixes
/// the ring context (modulus of ModInt, conductor of CycElt).
template <class R>
class GroupRingElement {
 public:
  GroupRingElement() : GroupRingElement(1, R()) {}
  GroupRingElement(std::int64_t modulus, const R& zero)
      : group_(unit_group(modulus)), zero_(ring_zero(zero)),
        coeffs_(group_->size(), zero_) {}
  GroupRingElement(std::int64_t modulus, std::vector<R> coeffs, const R& zero)
      : group_(unit_group(modulus)), zero_(ring_zero(zero)),
        coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->size()) {
      throw PreconditionError("group ring: expected " +
                              std::to_string(group_->size()) + " coefficients");
    }
  }

  static GroupRingElement delta(std::int64_t modulus, std::int64_t a,
                                const R& one) {
    GroupRingElement x(modulus, one);
    x.coeff(a) = one;
    return x;
  }
  static GroupRingElement group_sum(std::int64_t modulus, const R& one) {
    return GroupRingElement(modulus,
                            std::vector<R>(unit_group(modulus)->size(), one), one);
  }

  std::int64_t modulus() const { return group_->modulus; }
  const std::vector<std::int64_t>& units() const { return group_->units; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& zero() const { return zero_; }

  // Coefficient of sigma_a; a is reduced mod m and must be a unit.
  R& coeff(std::int64_t a) { return coeffs_[group_->index(a)]; }
  const R& coeff(std::int64_t a) const { return coeffs_[group_->index(a)]; }
  R& at(std::size_t i) { return coeffs_[i]; }
  const R& at(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  R augmentation() const {
    R s = zero_;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  GroupRingElement operator-() const {
    GroupRingElement r = *this;
    for (auto& c : r.coeffs_) c = zero_ - c;
    return r;
  }
  // Scalar multiple.
  GroupRingElement scaled(const R& s) const {
    GroupRingElement r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

  // Convolution product.
  friend GroupRingElement operator*(const GroupRingElement& x,
                                    const GroupRingElement& y) {
    x.check_same(y);
    const auto m = x.modulus();
    const auto& u = x.units();
    GroupRingElement z(m, x.zero_);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (y.coeffs_[j].is_zero()) continue;
        z.coeff(nt::mulmod(u[i], u[j], m)) += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return z;
  }

  // sigma_b * x.
  GroupRingElement shifted(std::int64_t b) const {
    GroupRingElement z(modulus(), zero_);
    const auto m = modulus();
    for (std::size_t i = 0; i < size(); ++i) {
      z.coeff(nt::mulmod(nt::mod(b, m), units()[i], m)) = coeffs_[i];
    }
    return z;
  }

  // Natural projection to level target (target | m).
  GroupRingElement project(std::int64_t target) const {
    if (target < 1 || modulus() % target != 0) {
      throw PreconditionError("project: " + std::to_string(target) +
                              " does not divide " + std::to_string(modulus()));
    }
    GroupRingElement z(target, zero_);
    for (std::size_t i = 0; i < size(); ++i) {
      z.coeff(units()[i] % target) += coeffs_[i];
    }
    return z;
  }

  // Norm map to level target (m | target): sigma_b -> sum of its lifts.
  GroupRingElement norm_map(std::int64_t target) const {
    if (target < 1 || target % modulus() != 0) {
      throw PreconditionError("norm_map: " + std::to_string(modulus()) +
                              " does not divide " + std::to_string(target));
    }
    GroupRingElement z(target, zero_);
    for (std::size_t i = 0; i < z.size(); ++i) {
      z.coeffs_[i] = coeff(z.units()[i] % modulus());
    }
    return z;
  }

  // Coefficientwise ring change.
  template <class S, class F>
  GroupRingElement<S> map(F f, const S& zero) const {
    std::vector<S> out;
    out.reserve(size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return GroupRingElement<S>(modulus(), std::move(out), zero);
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs_[i].to_string() + ")*s" + std::to_string(units()[i]);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_same(const GroupRingElement& o) const {
    if (modulus() != o.modulus()) {
      throw MismatchError("group ring: moduli " + std::to_string(modulus()) +
                          " and " + std::to_string(o.modulus()));
    }
  }

  std::shared_ptr<const UnitGroup> group_;
  R zero_;
  std::vector<R> coeffs_;
};

using RatGroupRing = GroupRingElement<Rat>;
using ModGroupRing = GroupRingElement<ModInt>;
using CycGroupRing = GroupRingElement<CycElt>;

// First differing unit (or -1) between two elements of the same level.
template <class R>
std::int64_t first_difference(const GroupRingElement<R>& a,
                              const GroupRingElement<R>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.at(i) == b.at(i))) return a.units()[i];
  }
  return -1;
}

ModGroupRing reduce_mod(const RatGroupRing& x, std::int64_t modulus);

/// chi(a) = zeta_n^{e(a)} with n the exponent of (Z/dZ)^x.
class DirichletCharacter {
 public:
  static DirichletCharacter trivial(std::int64_t d);
  // All phi(d) characters mod d, in a fixed deterministic order.
  static std::vector<DirichletCharacter> all(std::int64_t d);
  // Characters whose conductor is exactly d.
  static std::vector<DirichletCharacter> primitive(std::int64_t d);
  // Built from the images zeta_n^{e} of the internal generators; checks
  // multiplicativity.
  static DirichletCharacter from_generator_exponents(
      std::int64_t d, const std::vector<std::int64_t>& exps);

  std::int64_t modulus() const { return modulus_; }
  // Value field is Q(zeta_{value_order()}).
  std::int64_t value_order() const { return n_; }
  // Order of chi as a group element.
  std::int64_t order() const;
  // e(a) in [0, n); a must be a unit mod d.
  std::int64_t exponent(std::int64_t a) const;
  CycElt value(std::int64_t a) const;
  int parity() const;
  std::int64_t conductor() const;
  bool is_primitive() const { return conductor() == modulus_; }
  bool is_trivial() const;
  DirichletCharacter conjugate() const;
  // Same character viewed modulo a multiple of d.
  DirichletCharacter lift(std::int64_t multiple) const;
  // Generators of (Z/dZ)^x used for the exponent encoding.
  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::string to_string() const;

  friend bool operator==(const DirichletCharacter& a,
                         const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::int64_t modulus_ = 1;
  std::int64_t n_ = 1;
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> gen_orders_;
  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::int64_t> table_;  // exponent per unit position
};

// Generators of (Z/dZ)^x (one per cyclic factor) and their orders.
std::vector<std::pair<std::int64_t, std::int64_t>> unit_group_generators(
    std::int64_t d);

/// sum_a x_a chi(a) in Q(zeta_n). chi's modulus must divide x's modulus.
CycElt eval_character(const RatGroupRing& x, const DirichletCharacter& chi);
CycElt eval_character(const CycGroupRing& x, const DirichletCharacter& chi);

/// Element of (Z/p^k)[zeta_n] in the power basis modulo Phi_n.
struct CycResidue {
  std::int64_t conductor = 1;
  std::vector<ModInt> coeffs;

  bool is_zero() const;
  friend bool operator==(const CycResidue& a, const CycResidue& b) = default;
  CycResidue scaled(const ModInt& s) const;
  std::string to_string() const;
};

CycResidue reduce_cyc(const CycElt& x, std::int64_t modulus);
CycResidue eval_character(const ModGroupRing& x, const DirichletCharacter& chi);

/// tau(chi) = sum chi(a) zeta_d^a for primitive chi.
CycElt gauss_sum(const DirichletCharacter& chi);

/// D_l = sum_{i=0}^{l-2} i sigma_{eta^i}.
RatGroupRing kolyvagin_derivative(std::int64_t l, std::int64_t eta);

struct TelescopingCheck {
  bool holds = false;
  std::int64_t witness = -1;  // first differing unit
};
// (sigma_eta - 1) D_l == (l - 1) - N_l.
TelescopingCheck check_telescoping(std::int64_t l, std::int64_t eta);

}  // namespace betti
