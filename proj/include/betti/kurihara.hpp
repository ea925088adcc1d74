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

// Admissible primes, discrete logarithms and Kurihara numbers.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "betti/arith.hpp"
#include "betti/modsym.hpp"

namespace betti {

struct AdmissiblePrimeSet {
  std::string label;
  std::int64_t p = 3;
  int k = 1;
  std::int64_t bound = 0;
  std::vector<std::int64_t> primes;
  std::map<std::int64_t, std::int64_t> eta;  // smallest primitive root per prime

  bool contains(std::int64_t l) const { return eta.count(l) != 0; }
};

/// Primes l <= bound with l coprime to Np, l = 1 and a_l = l + 1 mod p^k.
AdmissiblePrimeSet sieve_admissible(const CurveData& curve, std::int64_t p, int k,
                                    std::int64_t bound);

/// x in [0, l-1) with eta^x = a mod l (baby-step giant-step).
ModInt discrete_log(std::int64_t l, std::int64_t eta, std::int64_t a);
/// log_eta(a) for every a in [1, l); entry 0 unused.
std::vector<std::int64_t> log_table(std::int64_t l, std::int64_t eta);

struct KuriharaNumber {
  std::int64_t n = 1;
  std::vector<std::int64_t> factors;
  ModInt value;
  // p-adic valuation e of I_n = prod_{l|n} (l - 1, 1 - a_l + l), I_n = p^e Z_p.
  int ideal_exponent = 0;
  std::string ideal_note;

  bool vanishes() const { return value.is_zero(); }
};

/// delta_n = sum_{a in (Z/n)^x} [a/n]^+ prod_{l | n} log_{eta_l}(a) mod p^k,
/// with the integral + symbol. eta_override replaces chosen primitive roots.
KuriharaNumber kurihara_number(const CurveSymbols& s, std::int64_t n,
                               const AdmissiblePrimeSet& set,
                               const std::map<std::int64_t, std::int64_t>& eta_override = {});

struct KuriharaTable {
  std::vector<KuriharaNumber> rows;
  bool any_nonvanishing = false;
  std::string summary;
};

/// Every squarefree n built from at most max_nu admissible primes.
KuriharaTable nonvanishing_search(const CurveSymbols& s, const AdmissiblePrimeSet& set,
                                  int max_nu,
                                  const std::map<std::int64_t, std::int64_t>& eta_override = {});

// Squarefree products of at most max_nu entries of primes, sorted.
// Uniformly random primitive root per admissible prime (std::mt19937_64).
std::map<std::int64_t, std::int64_t> random_primitive_roots(const AdmissiblePrimeSet& set,
                                                            std::uint64_t seed);

std::vector<std::int64_t> admissible_products(const std::vector<std::int64_t>& primes,
                                              int max_nu);

}  // namespace betti
