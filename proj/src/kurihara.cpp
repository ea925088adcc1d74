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

#include "betti/kurihara.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "betti/errors.hpp"
#include "betti/kernels.hpp"
#include "betti/numtheory.hpp"

namespace betti {

AdmissiblePrimeSet sieve_admissible(const CurveData& curve, std::int64_t p, int k,
                                    std::int64_t bound) {
  if (!nt::is_prime(p) || p == 2) {
    throw PreconditionError("sieve_admissible: p must be an odd prime");
  }
  if (k < 1) throw PreconditionError("sieve_admissible: k must be >= 1");
  if (bound > kDefaultPointCountBound) {
    throw PreconditionError("sieve_admissible: bound " + std::to_string(bound) +
                            " exceeds point-counting limit " +
                            std::to_string(kDefaultPointCountBound));
  }
  AdmissiblePrimeSet set;
  set.label = curve.label;
  set.p = p;
  set.k = k;
  set.bound = bound;
  const std::int64_t pk = nt::ipow(p, k);
  std::vector<std::int64_t> candidates;
  for (auto l : nt::primes_up_to(bound)) {
    if (l == p || curve.is_bad(l) || (l - 1) % pk != 0) continue;
    candidates.push_back(l);
  }
  auto a = kernels::ap_batch_parallel(curve, candidates);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::int64_t l = candidates[i];
    if (nt::mod(a[i] - (l + 1), pk) != 0) continue;
    set.primes.push_back(l);
    set.eta[l] = nt::primitive_root(l);
  }
  return set;
}

ModInt discrete_log(std::int64_t l, std::int64_t eta, std::int64_t a) {
  if (!nt::is_prime(l)) throw PreconditionError("discrete_log: modulus must be prime");
  if (nt::mod(a, l) == 0) throw PreconditionError("discrete_log: a = 0 mod l");
  if (!nt::is_primitive_root(nt::mod(eta, l), l)) {
    throw PreconditionError("discrete_log: " + std::to_string(eta) +
                            " is not a primitive root mod " + std::to_string(l));
  }
  const std::int64_t order = l - 1;
  const auto m = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::int64_t, std::int64_t> baby;
  std::int64_t x = 1;
  for (std::int64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = nt::mulmod(x, eta, l);
  }
  const std::int64_t giant = nt::powmod(nt::invmod(nt::mod(eta, l), l), m, l);
  std::int64_t g = nt::mod(a, l);
  for (std::int64_t i = 0; i <= m; ++i) {
    auto it = baby.find(g);
    if (it != baby.end()) return ModInt((i * m + it->second) % order, order);
    g = nt::mulmod(g, giant, l);
  }
  throw PreconditionError("discrete_log: no solution");  // unreachable for primitive eta
}

std::vector<std::int64_t> log_table(std::int64_t l, std::int64_t eta) {
  if (!nt::is_primitive_root(nt::mod(eta, l), l)) {
    throw PreconditionError("log_table: " + std::to_string(eta) +
                            " is not a primitive root mod " + std::to_string(l));
  }
  std::vector<std::int64_t> t(static_cast<std::size_t>(l), 0);
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < l - 1; ++i) {
    t[x] = i;
    x = nt::mulmod(x, nt::mod(eta, l), l);
  }
  return t;
}

KuriharaNumber kurihara_number(const CurveSymbols& s, std::int64_t n,
                               const AdmissiblePrimeSet& set,
                               const std::map<std::int64_t, std::int64_t>& eta_override) {
  if (n < 1 || !nt::is_squarefree(n)) {
    throw PreconditionError("kurihara_number: n = " + std::to_string(n) +
                            " is not squarefree");
  }
  KuriharaNumber out;
  out.n = n;
  const std::int64_t pk = nt::ipow(set.p, set.k);
  std::vector<std::vector<std::int64_t>> logs;
  for (auto [l, e] : nt::factorize(n)) {
    (void)e;
    if (!set.contains(l)) {
      throw PreconditionError("kurihara_number: factor " + std::to_string(l) +
                              " is not admissible");
    }
    out.factors.push_back(l);
    auto it = eta_override.find(l);
    logs.push_back(log_table(l, it != eta_override.end() ? it->second : set.eta.at(l)));
    std::int64_t v1 = valuation(Int(static_cast<long>(l - 1)), set.p);
    std::int64_t t = l + 1 - ap(s.curve, l);
    std::int64_t v2 = t == 0 ? v1 : valuation(Int(static_cast<long>(t)), set.p);
    out.ideal_exponent += static_cast<int>(std::min(v1, v2));
  }
  out.ideal_note = "I_n = " + std::to_string(set.p) + "^" +
                   std::to_string(out.ideal_exponent) + " Z_p";
  const EigenSymbol plus = s.plus.integral();
  ModInt acc(0, pk);
  for (auto a : nt::units_mod(n)) {
    Rat v = symbol_value(plus, Rat(Int(static_cast<long>(a)), Int(static_cast<long>(n))));
    ModInt term = ModInt::from_rat(v, pk);
    for (std::size_t i = 0; i < out.factors.size() && !term.is_zero(); ++i) {
      term = term.scaled(logs[i][a % out.factors[i]] % pk);
    }
    acc += term;
  }
  out.value = acc;
  return out;
}

std::vector<std::int64_t> admissible_products(const std::vector<std::int64_t>& primes,
                                              int max_nu) {
  std::vector<std::int64_t> out{1};
  std::vector<std::pair<std::int64_t, std::size_t>> frontier{{1, 0}};
  for (int nu = 1; nu <= max_nu; ++nu) {
    std::vector<std::pair<std::int64_t, std::size_t>> next;
    for (auto [n, start] : frontier) {
      for (std::size_t i = start; i < primes.size(); ++i) {
        next.emplace_back(n * primes[i], i + 1);
        out.push_back(n * primes[i]);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

KuriharaTable nonvanishing_search(const CurveSymbols& s, const AdmissiblePrimeSet& set,
                                  int max_nu,
                                  const std::map<std::int64_t, std::int64_t>& eta_override) {
  KuriharaTable t;
  t.rows = kernels::kurihara_rows_parallel(s, set, admissible_products(set.primes, max_nu),
                                           eta_override);
  std::size_t nonzero = 0;
  for (const auto& r : t.rows) {
    if (!r.vanishes()) ++nonzero;
  }
  t.any_nonvanishing = nonzero > 0;
  t.summary = std::to_string(t.rows.size()) + " values, " + std::to_string(nonzero) +
              (t.any_nonvanishing ? " nonvanishing" : " nonvanishing (none found)");
  return t;
}

std::map<std::int64_t, std::int64_t> random_primitive_roots(const AdmissiblePrimeSet& set,
                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t l : set.primes) {
    std::uniform_int_distribution<std::int64_t> pick(1, l - 1);
    std::int64_t g = pick(rng);
    while (!nt::is_primitive_root(g, l)) g = pick(rng);
    out[l] = g;
  }
  return out;
}

}  // namespace betti
