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

// Serial vs OpenMP kernels. The argument of the *_parallel cases is the
// thread count.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "betti/kernels.hpp"
#include "betti/numtheory.hpp"

using namespace betti;

namespace {

const CurveData& curve37() {
  static const auto cat = bundled_catalog();
  return *find_curve(cat, "37a1");
}

const CurveSymbols& symbols37() {
  static const CurveSymbols s = curve_symbols(curve37());
  return s;
}

std::vector<std::int64_t> good_primes(std::int64_t bound) {
  auto p = nt::primes_up_to(bound);
  p.erase(std::remove(p.begin(), p.end(), 37), p.end());
  return p;
}

void ap_serial(benchmark::State& st) {
  auto primes = good_primes(4000);
  for (auto _ : st) {
    // Fresh model each time so the a_l cache does not hide the work.
    CurveData e = make_curve("37a1", curve37().a, 37, -1);
    benchmark::DoNotOptimize(kernels::ap_batch_serial(e, primes));
  }
}

void ap_parallel(benchmark::State& st) {
  kernels::set_threads(static_cast<int>(st.range(0)));
  auto primes = good_primes(4000);
  for (auto _ : st) {
    CurveData e = make_curve("37a1", curve37().a, 37, -1);
    benchmark::DoNotOptimize(kernels::ap_batch_parallel(e, primes));
  }
}

void symbols_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::symbol_values_serial(symbols37().plus, 2401));
}

void symbols_parallel(benchmark::State& st) {
  kernels::set_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::symbol_values_parallel(symbols37().plus, 2401));
  }
}

struct KuriharaInput {
  AdmissiblePrimeSet set;
  std::vector<std::int64_t> ns;
};

const KuriharaInput& kurihara_input() {
  static const KuriharaInput in = [] {
    KuriharaInput k;
    k.set = sieve_admissible(curve37(), 3, 1, 1000);
    k.ns = admissible_products(k.set.primes, 1);
    return k;
  }();
  return in;
}

void kurihara_serial(benchmark::State& st) {
  const auto& in = kurihara_input();
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::kurihara_rows_serial(symbols37(), in.set, in.ns, in.set.eta));
  }
}

void kurihara_parallel(benchmark::State& st) {
  kernels::set_threads(static_cast<int>(st.range(0)));
  const auto& in = kurihara_input();
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        kernels::kurihara_rows_parallel(symbols37(), in.set, in.ns, in.set.eta));
  }
}

std::vector<CycElt> operand(long seed) {
  std::vector<CycElt> v;
  for (long i = 0; i < 200; ++i) v.push_back(CycElt::zeta(15, seed * i) * Rat(i % 7 - 3));
  return v;
}

void convolve_serial(benchmark::State& st) {
  auto a = operand(1), b = operand(2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_serial(a, b, 200, CycElt(15)));
}

void convolve_parallel(benchmark::State& st) {
  kernels::set_threads(static_cast<int>(st.range(0)));
  auto a = operand(1), b = operand(2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_parallel(a, b, 200, CycElt(15)));
}

}  // namespace

BENCHMARK(ap_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(ap_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(symbols_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(symbols_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(kurihara_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(kurihara_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(convolve_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(convolve_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
