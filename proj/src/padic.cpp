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

#include "betti/padic.hpp"

#include "betti/errors.hpp"

namespace betti {

PadicThetaTower PadicThetaTower::scaled(const ModInt& s) const {
  PadicThetaTower out = *this;
  out.theta_q = theta_q * s;
  for (auto& l : out.layers) l = l.scaled(s);
  out.raw.clear();
  return out;
}

PadicThetaTower stabilize(ThetaCache& cache, std::int64_t p, int k, int n_max,
                          NormVariant variant) {
  const auto& curve = cache.symbols().curve;
  if (!nt::is_prime(p) || p == 2) {
    throw PreconditionError("stabilize: p must be an odd prime");
  }
  if (k < 1 || n_max < 1) throw PreconditionError("stabilize: need k >= 1, n_max >= 1");
  if (curve.is_bad(p)) {
    throw NonOrdinaryError("stabilize: bad prime " + std::to_string(p) + " for " +
                           curve.label);
  }
  PadicThetaTower t;
  t.label = curve.label;
  t.p = p;
  t.k = k;
  t.modulus = nt::ipow(p, k);
  t.variant = variant;
  t.alpha = hensel_unit_root(ap(curve, p), p, k);
  const ModInt alpha_inv = t.alpha.inverse();
  const ModInt c = variant == NormVariant::kA ? alpha_inv : alpha_inv.scaled(p);

  auto reduce = [&](const RatGroupRing& x, std::int64_t level) {
    try {
      return reduce_mod(x, t.modulus);
    } catch (const PrecisionError&) {
      throw PrecisionError("stabilize: theta at level " + std::to_string(level) +
                           " is not " + std::to_string(p) + "-integral");
    }
  };
  RatGroupRing prev_raw = cache.get(1).total();
  ModGroupRing prev = reduce(prev_raw, 1);
  t.theta_q = prev.at(0);
  ModInt alpha_pow_inv = ModInt(1, t.modulus);
  std::int64_t level = 1;
  for (int n = 1; n <= n_max; ++n) {
    level *= p;
    alpha_pow_inv = alpha_pow_inv * alpha_inv;
    RatGroupRing cur_raw = cache.get(level).total();
    ModGroupRing cur = reduce(cur_raw, level);
    ModGroupRing layer = (cur - prev.norm_map(level).scaled(c)).scaled(alpha_pow_inv);
    t.layers.push_back(std::move(layer));
    t.raw.push_back(cur_raw);
    prev = std::move(cur);
  }
  return t;
}

PadicThetaTower tower_from_layers(std::int64_t p, int k,
                                  std::vector<ModGroupRing> layers) {
  PadicThetaTower t;
  t.label = "synthetic";
  t.p = p;
  t.k = k;
  t.modulus = nt::ipow(p, k);
  t.alpha = ModInt(1, t.modulus);
  t.theta_q = ModInt(0, t.modulus);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].modulus() != nt::ipow(p, static_cast<int>(i) + 1)) {
      throw PreconditionError("tower_from_layers: layer " + std::to_string(i + 1) +
                              " has the wrong modulus");
    }
  }
  t.layers = std::move(layers);
  return t;
}

ProjectivityReport check_projectivity(const PadicThetaTower& t) {
  ProjectivityReport r;
  for (int n = 1; n < t.n_max(); ++n) {
    auto w = first_difference(t.layer(n + 1).project(t.layer(n).modulus()), t.layer(n));
    if (w >= 0) {
      r.holds = false;
      r.failing_layer = n;
      r.witness = w;
      return r;
    }
  }
  return r;
}

TrivialInterpolation interpolate_trivial(const PadicThetaTower& t) {
  if (t.layers.empty()) throw PreconditionError("interpolate_trivial: empty tower");
  TrivialInterpolation r;
  r.augmentation = t.layer(1).augmentation();
  ModInt one(1, t.modulus);
  ModInt f = one - t.alpha.inverse();
  r.expected = f * f * t.theta_q;
  for (int n = 2; n <= t.n_max(); ++n) {
    if (!(t.layer(n).augmentation() == r.augmentation)) {
      r.layers_agree = false;
      r.discrepant_layer = n;
      break;
    }
  }
  r.holds = r.layers_agree && r.augmentation == r.expected;
  return r;
}

CharacterInterpolation interpolate_character(const PadicThetaTower& t,
                                             const DirichletCharacter& chi) {
  CharacterInterpolation r;
  std::int64_t d = chi.modulus();
  int n = 0;
  for (std::int64_t q = 1; q < d; q *= t.p) ++n;
  if (nt::ipow(t.p, n) != d || chi.conductor() != d) {
    throw PreconditionError("interpolate_character: conductor must be a power of " +
                            std::to_string(t.p));
  }
  if (n == 0) {
    auto triv = interpolate_trivial(t);
    r.lhs = CycResidue{1, {triv.augmentation}};
    r.rhs = CycResidue{1, {triv.expected}};
    r.holds = triv.holds;
    return r;
  }
  if (n > t.n_max() || t.raw.empty()) {
    throw PreconditionError("interpolate_character: layer " + std::to_string(n) +
                            " unavailable");
  }
  r.n = n;
  r.lhs = eval_character(t.layer(n), chi);
  r.rhs = reduce_cyc(eval_character(t.raw[n - 1], chi), t.modulus)
              .scaled(t.alpha.inverse().pow(n));
  r.holds = r.lhs == r.rhs;
  return r;
}

std::vector<ModInt> tame_trivial_component(const ModGroupRing& layer, std::int64_t p) {
  const std::int64_t pn = layer.modulus();
  const std::int64_t size = pn / p;  // |Gamma_n| = p^{n-1}
  const ModInt zero = layer.zero();
  // gamma^j -> j for the principal units mod p^n.
  std::vector<std::int64_t> log(static_cast<std::size_t>(pn), -1);
  std::int64_t g = 1 % pn;
  for (std::int64_t j = 0; j < size; ++j) {
    log[g] = j;
    g = nt::mulmod(g, (1 + p) % pn, pn);
  }
  std::vector<ModInt> c(static_cast<std::size_t>(size), zero);
  for (std::size_t i = 0; i < layer.size(); ++i) {
    std::int64_t a = layer.units()[i];
    std::int64_t omega = nt::powmod(a, size, pn);  // Teichmuller mod p^n
    std::int64_t principal = nt::mulmod(a, nt::invmod(omega, pn), pn);
    c[log[principal]] += layer.at(i);
  }
  return c;
}

std::vector<ModInt> to_t_expansion(const std::vector<ModInt>& c) {
  if (c.empty()) return {};
  const std::int64_t mod = c[0].modulus();
  const std::size_t n = c.size();
  std::vector<ModInt> b(n, ModInt(0, mod));
  // Row j of Pascal's triangle mod the coefficient modulus.
  std::vector<std::int64_t> row(n, 0);
  row[0] = 1 % mod;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) {
      for (std::size_t i = j; i > 0; --i) row[i] = (row[i] + row[i - 1]) % mod;
    }
    if (c[j].is_zero()) continue;
    for (std::size_t i = 0; i <= j; ++i) b[i] += c[j].scaled(row[i]);
  }
  return b;
}

LayerReading read_layer(const PadicThetaTower& t, int n) {
  auto b = to_t_expansion(tame_trivial_component(t.layer(n), t.p));
  LayerReading r;
  int best = t.k;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero()) continue;
    int v = valuation(Int(static_cast<long>(b[i].value())), static_cast<long>(t.p));
    if (v < best) {
      best = v;
      r.lambda = static_cast<int>(i);
    }
  }
  if (best >= t.k) {
    throw PrecisionError("iwasawa_invariants: precision insufficient (mu >= " +
                         std::to_string(t.k) + " at layer " + std::to_string(n) + ")");
  }
  r.mu = best;
  return r;
}

IwasawaInvariants iwasawa_invariants(const PadicThetaTower& t) {
  if (t.n_max() < 3) {
    throw PreconditionError("iwasawa_invariants: needs at least 3 layers");
  }
  auto top = read_layer(t, t.n_max());
  auto below = read_layer(t, t.n_max() - 1);
  if (top.lambda != below.lambda || top.mu != below.mu) {
    throw PrecisionError("iwasawa_invariants: precision insufficient (lambda not stabilized: " +
                         std::to_string(below.lambda) + " vs " + std::to_string(top.lambda) + ")");
  }
  IwasawaInvariants out;
  out.lambda = top.lambda;
  out.mu = top.mu;
  out.layer = t.n_max() - 1;
  out.precision = t.k;
  out.stable = true;
  return out;
}

}  // namespace betti
