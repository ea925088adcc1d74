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

#include "betti/kernels.hpp"

#include <omp.h>

#include <atomic>

#include "betti/numtheory.hpp"

namespace betti::kernels {

namespace {

std::atomic<int> g_threads{0};

int team() {
  int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

}  // namespace

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }
int threads() { return team(); }

std::vector<std::int64_t> ap_batch_serial(const CurveData& curve,
                                          const std::vector<std::int64_t>& primes) {
  std::vector<std::int64_t> out(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::int64_t l = primes[i];
    out[i] = curve.is_bad(l) ? bad_ap(curve, l) : l + 1 - count_reduced_points(curve, l);
  }
  return out;
}

std::vector<std::int64_t> ap_batch_parallel(const CurveData& curve,
                                            const std::vector<std::int64_t>& primes) {
  std::vector<std::int64_t> out(primes.size());
  const auto n = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(team())
  for (std::int64_t i = 0; i < n; ++i) out[i] = ap(curve, primes[i]);
  return out;
}

std::vector<Rat> symbol_values_serial(const EigenSymbol& e, std::int64_t m) {
  auto units = nt::units_mod(m);
  std::vector<Rat> out;
  out.reserve(units.size());
  for (auto a : units) {
    out.push_back(symbol_value(e, Rat(Int(static_cast<long>(a)), Int(static_cast<long>(m)))));
  }
  return out;
}

std::vector<Rat> symbol_values_parallel(const EigenSymbol& e, std::int64_t m) {
  auto units = nt::units_mod(m);
  std::vector<Rat> out(units.size());
  const auto n = static_cast<std::int64_t>(units.size());
#pragma omp parallel for schedule(static) num_threads(team()) if (n > 256)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = symbol_value(e, Rat(Int(static_cast<long>(units[i])), Int(static_cast<long>(m))));
  }
  return out;
}

std::vector<KuriharaNumber> kurihara_rows_serial(const CurveSymbols& s,
                                                 const AdmissiblePrimeSet& set,
                                                 const std::vector<std::int64_t>& ns,
                                                 const EtaMap& eta) {
  std::vector<KuriharaNumber> out;
  out.reserve(ns.size());
  for (auto n : ns) out.push_back(kurihara_number(s, n, set, eta));
  return out;
}

std::vector<KuriharaNumber> kurihara_rows_parallel(const CurveSymbols& s,
                                                   const AdmissiblePrimeSet& set,
                                                   const std::vector<std::int64_t>& ns,
                                                   const EtaMap& eta) {
  std::vector<KuriharaNumber> out(ns.size());
  const auto n = static_cast<std::int64_t>(ns.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(team())
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = kurihara_number(s, ns[i], set, eta);
    } catch (...) {
#pragma omp critical(betti_kernel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<CycElt> convolve_serial(const std::vector<CycElt>& a,
                                    const std::vector<CycElt>& b, std::size_t len,
                                    const CycElt& zero) {
  std::vector<CycElt> out(len, zero);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<CycElt> convolve_parallel(const std::vector<CycElt>& a,
                                      const std::vector<CycElt>& b, std::size_t len,
                                      const CycElt& zero) {
  std::vector<CycElt> out(len, zero);
  const auto n = static_cast<std::int64_t>(len);
#pragma omp parallel for schedule(dynamic, 2) num_threads(team()) if (len > 16)
  for (std::int64_t i = 0; i < n; ++i) {
    CycElt acc = zero;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(i) && j < a.size(); ++j) {
      std::size_t r = static_cast<std::size_t>(i) - j;
      if (r >= b.size() || a[j].is_zero() || b[r].is_zero()) continue;
      acc += a[j] * b[r];
    }
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace betti::kernels
