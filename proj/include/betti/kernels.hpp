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

// Hot loops with a serial reference and an OpenMP version each. Library
// code calls the parallel versions; tests compare the two.

#include <cstdint>
#include <map>
#include <vector>

#include "betti/arith.hpp"
#include "betti/curve.hpp"
#include "betti/kurihara.hpp"
#include "betti/modsym.hpp"

namespace betti::kernels {

// Thread count for the parallel kernels; 0 means the OpenMP default.
void set_threads(int n);
int threads();

std::vector<std::int64_t> ap_batch_serial(const CurveData& curve,
                                          const std::vector<std::int64_t>& primes);
std::vector<std::int64_t> ap_batch_parallel(const CurveData& curve,
                                            const std::vector<std::int64_t>& primes);

// [a/m] for every unit a mod m, in increasing order of a.
std::vector<Rat> symbol_values_serial(const EigenSymbol& e, std::int64_t m);
std::vector<Rat> symbol_values_parallel(const EigenSymbol& e, std::int64_t m);

using EtaMap = std::map<std::int64_t, std::int64_t>;
std::vector<KuriharaNumber> kurihara_rows_serial(const CurveSymbols& s,
                                                 const AdmissiblePrimeSet& set,
                                                 const std::vector<std::int64_t>& ns,
                                                 const EtaMap& eta);
std::vector<KuriharaNumber> kurihara_rows_parallel(const CurveSymbols& s,
                                                   const AdmissiblePrimeSet& set,
                                                   const std::vector<std::int64_t>& ns,
                                                   const EtaMap& eta);

// Truncated product: out[i] = sum_{j <= i} a[j] b[i - j], i < len.
std::vector<CycElt> convolve_serial(const std::vector<CycElt>& a,
                                    const std::vector<CycElt>& b, std::size_t len,
                                    const CycElt& zero);
std::vector<CycElt> convolve_parallel(const std::vector<CycElt>& a,
                                      const std::vector<CycElt>& b, std::size_t len,
                                      const CycElt& zero);

}  // namespace betti::kernels
