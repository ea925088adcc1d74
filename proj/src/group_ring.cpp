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

#include "betti/group_ring.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace betti {

std::size_t UnitGroup::index(std::int64_t a) const {
  std::int32_t p = position[nt::mod(a, modulus)];
  if (p < 0) {
    throw PreconditionError(std::to_string(a) + " is not a unit mod " +
                            std::to_string(modulus));
  }
  return static_cast<std::size_t>(p);
}

std::shared_ptr<const UnitGroup> unit_group(std::int64_t m) {
  if (m < 1) throw PreconditionError("unit_group: modulus must be >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<UnitGroup>();
  g->modulus = m;
  g->units = nt::units_mod(m);
  g->position.assign(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < g->units.size(); ++i) {
    g->position[g->units[i]] = static_cast<std::int32_t>(i);
  }
  cache.emplace(m, g);
  return g;
}

ModGroupRing reduce_mod(const RatGroupRing& x, std::int64_t modulus) {
  return x.map<ModInt>([&](const Rat& r) { return ModInt::from_rat(r, modulus); },
                       ModInt(0, modulus));
}

std::vector<std::pair<std::int64_t, std::int64_t>> unit_group_generators(
    std::int64_t d) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (d < 1) throw PreconditionError("unit_group_generators: d must be >= 1");
  for (auto [p, e] : nt::factorize(d)) {
    std::int64_t pe = nt::ipow(p, e);
    std::int64_t rest = d / pe;
    // CRT lift: x = g (mod p^e), x = 1 (mod rest).
    auto lift = [&](std::int64_t g) {
      if (rest == 1) return nt::mod(g, pe);
      std::int64_t t = nt::mulmod(nt::mod(g - 1, pe), nt::invmod(rest % pe, pe), pe);
      return nt::mod(1 + rest * t, d);
    };
    if (p == 2) {
      if (e >= 2) out.emplace_back(lift(-1), 2);
      if (e >= 3) out.emplace_back(lift(5), nt::ipow(2, e - 2));
    } else {
      std::int64_t g = nt::primitive_root(p);
      if (e >= 2 && nt::powmod(g, p - 1, p * p) == 1) g += p;
      out.emplace_back(lift(g), pe / p * (p - 1));
    }
  }
  return out;
}

namespace {

// Generator exponent vectors of every unit mod d.
struct LogTable {
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> orders;
  std::int64_t exponent = 1;
  std::shared_ptr<const UnitGroup> group;
  std::vector<std::vector<std::int64_t>> logs;  // per unit position
};

std::shared_ptr<const LogTable> log_table(std::int64_t d) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const LogTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<LogTable>();
  for (auto [g, o] : unit_group_generators(d)) {
    t->gens.push_back(g);
    t->orders.push_back(o);
    t->exponent = std::lcm(t->exponent, o);
  }
  t->group = unit_group(d);
  t->logs.assign(t->group->size(), std::vector<std::int64_t>(t->gens.size(), 0));
  std::vector<std::int64_t> k(t->gens.size(), 0);
  while (true) {
    std::int64_t x = 1 % d;
    for (std::size_t i = 0; i < k.size(); ++i) {
      x = nt::mulmod(x, nt::powmod(t->gens[i], k[i], d), d);
    }
    t->logs[t->group->index(x)] = k;
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == t->orders[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, t);
  return t;
}

// Reduce sum c_j zeta^j (j < n) modulo the monic integer polynomial Phi_n.
std::vector<ModInt> reduce_residue_poly(std::vector<ModInt> a, std::int64_t n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t j = a.size(); j-- > deg;) {
    if (a[j].is_zero()) continue;
    ModInt c = a[j];
    for (std::size_t t = 0; t < deg; ++t) {
      a[j - deg + t] -= c.scaled(phi[t]);
    }
    a[j] = ModInt(0, c.modulus());
  }
  a.resize(deg);
  return a;
}

}  // namespace

DirichletCharacter DirichletCharacter::from_generator_exponents(
    std::int64_t d, const std::vector<std::int64_t>& exps) {
  auto t = log_table(d);
  if (exps.size() != t->gens.size()) {
    throw PreconditionError("character mod " + std::to_string(d) + " needs " +
                            std::to_string(t->gens.size()) + " generator images");
  }
  DirichletCharacter c;
  c.modulus_ = d;
  c.n_ = t->exponent;
  c.gens_ = t->gens;
  c.gen_orders_ = t->orders;
  c.group_ = t->group;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (nt::mulmod(nt::mod(exps[i], c.n_), t->orders[i], c.n_) != 0) {
      throw PreconditionError("character mod " + std::to_string(d) +
                              ": generator image is not multiplicative");
    }
  }
  c.table_.resize(t->group->size());
  for (std::size_t u = 0; u < c.table_.size(); ++u) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      e = nt::mod(e + nt::mulmod(t->logs[u][i], nt::mod(exps[i], c.n_), c.n_), c.n_);
    }
    c.table_[u] = e;
  }
  return c;
}

DirichletCharacter DirichletCharacter::trivial(std::int64_t d) {
  return from_generator_exponents(d, std::vector<std::int64_t>(log_table(d)->gens.size(), 0));
}

std::vector<DirichletCharacter> DirichletCharacter::all(std::int64_t d) {
  auto t = log_table(d);
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> k(t->gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> exps(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) exps[i] = k[i] * (t->exponent / t->orders[i]);
    out.push_back(from_generator_exponents(d, exps));
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == t->orders[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  return out;
}

std::vector<DirichletCharacter> DirichletCharacter::primitive(std::int64_t d) {
  std::vector<DirichletCharacter> out;
  for (auto& c : all(d)) {
    if (c.is_primitive()) out.push_back(std::move(c));
  }
  return out;
}

std::int64_t DirichletCharacter::order() const {
  std::int64_t g = n_;
  for (auto e : table_) g = std::gcd(g, e);
  return n_ / g;
}

std::int64_t DirichletCharacter::exponent(std::int64_t a) const {
  return table_[group_->index(a)];
}

CycElt DirichletCharacter::value(std::int64_t a) const {
  if (nt::gcd(nt::mod(a, modulus_), modulus_) != 1) return CycElt(n_);
  return CycElt::zeta(n_, exponent(a));
}

int DirichletCharacter::parity() const {
  return exponent(-1) == 0 ? 1 : -1;
}

std::int64_t DirichletCharacter::conductor() const {
  for (std::int64_t f = 1; f <= modulus_; ++f) {
    if (modulus_ % f != 0) continue;
    bool ok = true;
    for (std::size_t u = 0; u < table_.size() && ok; ++u) {
      if (group_->units[u] % f == 1 % f && table_[u] != 0) ok = false;
    }
    if (ok) return f;
  }
  return modulus_;
}

bool DirichletCharacter::is_trivial() const {
  for (auto e : table_) {
    if (e != 0) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter c = *this;
  for (auto& e : c.table_) e = nt::mod(-e, n_);
  return c;
}

DirichletCharacter DirichletCharacter::lift(std::int64_t multiple) const {
  if (multiple % modulus_ != 0) {
    throw PreconditionError("lift: " + std::to_string(modulus_) +
                            " does not divide " + std::to_string(multiple));
  }
  auto t = log_table(multiple);
  DirichletCharacter c;
  c.modulus_ = multiple;
  c.n_ = t->exponent;
  c.gens_ = t->gens;
  c.gen_orders_ = t->orders;
  c.group_ = t->group;
  c.table_.resize(t->group->size());
  const std::int64_t scale = c.n_ / n_;
  for (std::size_t u = 0; u < c.table_.size(); ++u) {
    c.table_[u] = exponent(t->group->units[u] % modulus_) * scale;
  }
  return c;
}

std::string DirichletCharacter::to_string() const {
  std::string s = "chi mod " + std::to_string(modulus_) + " [";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens_[i]) + "->z" + std::to_string(n_) + "^" +
         std::to_string(exponent(gens_[i]));
  }
  return s + "]";
}

namespace {

DirichletCharacter fit_character(const DirichletCharacter& chi, std::int64_t m) {
  if (m % chi.modulus() != 0) {
    throw MismatchError("eval_character: character modulus " +
                        std::to_string(chi.modulus()) + " does not divide " +
                        std::to_string(m));
  }
  return chi;
}

}  // namespace

CycElt eval_character(const RatGroupRing& x, const DirichletCharacter& chi) {
  fit_character(chi, x.modulus());
  const std::int64_t n = chi.value_order();
  std::vector<Rat> acc(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.at(i).is_zero()) continue;
    acc[chi.exponent(x.units()[i] % chi.modulus())] += x.at(i);
  }
  return CycElt(n, std::move(acc));
}

CycElt eval_character(const CycGroupRing& x, const DirichletCharacter& chi) {
  fit_character(chi, x.modulus());
  const long n = chi.value_order();
  long target = std::lcm(n, x.zero().conductor());
  CycElt acc(target);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.at(i).is_zero()) continue;
    auto z = cyc_embed(CycElt::zeta(n, chi.exponent(x.units()[i] % chi.modulus())), target);
    acc += cyc_embed(x.at(i), target) * z;
  }
  return acc;
}

bool CycResidue::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CycResidue CycResidue::scaled(const ModInt& s) const {
  CycResidue r = *this;
  for (auto& c : r.coeffs) c = c * s;
  return r;
}

std::string CycResidue::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i].value());
  }
  s += "]";
  if (!coeffs.empty()) s += " mod " + std::to_string(coeffs[0].modulus());
  return s;
}

CycResidue reduce_cyc(const CycElt& x, std::int64_t modulus) {
  CycResidue r;
  r.conductor = x.conductor();
  for (const auto& c : x.coeffs()) r.coeffs.push_back(ModInt::from_rat(c, modulus));
  return r;
}

CycResidue eval_character(const ModGroupRing& x, const DirichletCharacter& chi) {
  fit_character(chi, x.modulus());
  const std::int64_t n = chi.value_order();
  std::vector<ModInt> acc(static_cast<std::size_t>(n), x.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc[chi.exponent(x.units()[i] % chi.modulus())] += x.at(i);
  }
  CycResidue r;
  r.conductor = n;
  r.coeffs = reduce_residue_poly(std::move(acc), n);
  return r;
}

CycElt gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) {
    throw PreconditionError("gauss_sum: character " + chi.to_string() +
                            " is imprimitive");
  }
  const std::int64_t d = chi.modulus();
  const std::int64_t n = chi.value_order();
  const std::int64_t big = std::lcm(d, n);
  std::vector<Rat> acc(static_cast<std::size_t>(big));
  for (auto a : nt::units_mod(d)) {
    acc[(chi.exponent(a) * (big / n) + a * (big / d)) % big] += Rat(1);
  }
  return CycElt(big, std::move(acc));
}

RatGroupRing kolyvagin_derivative(std::int64_t l, std::int64_t eta) {
  if (!nt::is_prime(l)) {
    throw PreconditionError("kolyvagin_derivative: " + std::to_string(l) + " is not prime");
  }
  if (!nt::is_primitive_root(nt::mod(eta, l), l)) {
    throw PreconditionError("kolyvagin_derivative: " + std::to_string(eta) +
                            " is not a primitive root mod " + std::to_string(l));
  }
  RatGroupRing d(l, Rat(0));
  std::int64_t g = 1 % l;
  for (std::int64_t i = 0; i <= l - 2; ++i) {
    d.coeff(g) += Rat(i);
    g = nt::mulmod(g, nt::mod(eta, l), l);
  }
  return d;
}

TelescopingCheck check_telescoping(std::int64_t l, std::int64_t eta) {
  auto d = kolyvagin_derivative(l, eta);
  auto lhs = (RatGroupRing::delta(l, eta, Rat(1)) - RatGroupRing::delta(l, 1, Rat(1))) * d;
  auto rhs = RatGroupRing::delta(l, 1, Rat(l - 1)) - RatGroupRing::group_sum(l, Rat(1));
  TelescopingCheck out;
  out.witness = first_difference(lhs, rhs);
  out.holds = out.witness < 0;
  return out;
}

}  // namespace betti
