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

#include "betti/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "betti/errors.hpp"

namespace betti::oracle {

LValue lvalue_at_one(const CurveData& curve, std::optional<int> root_number) {
  std::optional<int> w = root_number ? root_number : curve.root_number();
  if (!w) {
    throw PreconditionError("numeric oracle: root number unknown for " +
                            curve.label);
  }
  const double pi = std::numbers::pi;
  double scale = 2.0 * pi / std::sqrt(static_cast<double>(curve.conductor));
  // exp(-scale * B) < 1e-20 keeps the tail far below binary64 resolution.
  auto bound = static_cast<std::int64_t>(std::ceil(46.0 / scale)) + 1;
  auto a = an_coefficients(curve, bound);
  double sum = 0.0;
  for (std::int64_t n = bound; n >= 1; --n) {
    sum += static_cast<double>(a[n]) / static_cast<double>(n) *
           std::exp(-scale * static_cast<double>(n));
  }
  LValue out;
  out.root_number = *w;
  out.value = (1.0 + *w) * sum;
  out.terms = bound;
  // |a_n| / n <= 1 for an elliptic curve (|a_n| <= d(n) sqrt(n) <= n).
  out.tail_bound = 2.0 * std::exp(-scale * static_cast<double>(bound + 1)) /
                   (1.0 - std::exp(-scale));
  return out;
}

namespace {

double agm(double a, double b) {
  for (int i = 0; i < 100 && std::abs(a - b) > 1e-16 * std::abs(a); ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

// Roots of 4x^3 + b2 x^2 + 2 b4 x + b6 by Durand-Kerner, polished by Newton.
std::vector<std::complex<double>> cubic_roots(double b2, double b4, double b6) {
  using C = std::complex<double>;
  auto f = [&](C x) { return ((4.0 * x + b2) * x + 2.0 * b4) * x + b6; };
  auto df = [&](C x) { return (12.0 * x + 2.0 * b2) * x + 2.0 * b4; };
  std::vector<C> r = {C(0.4, 0.9), C(0.4, 0.9) * C(0.4, 0.9),
                      C(0.4, 0.9) * C(0.4, 0.9) * C(0.4, 0.9)};
  double s = 1.0 + std::max({std::abs(b2), std::abs(b4), std::abs(b6)});
  for (auto& x : r) x *= s;
  for (int it = 0; it < 2000; ++it) {
    for (std::size_t i = 0; i < 3; ++i) {
      C den = 4.0;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) den *= (r[i] - r[j]);
      }
      r[i] -= f(r[i]) / den;
    }
  }
  for (auto& x : r) {
    for (int it = 0; it < 5; ++it) {
      C d = df(x);
      if (std::abs(d) > 0) x -= f(x) / d;
    }
  }
  return r;
}

}  // namespace

double real_period(const CurveData& curve) {
  double a1 = curve.a1(), a2 = curve.a2(), a3 = curve.a3(), a4 = curve.a4(),
         a6 = curve.a6();
  double b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
  auto roots = cubic_roots(b2, b4, b6);
  const double pi = std::numbers::pi;
  if (curve.discriminant() > 0) {
    std::vector<double> e;
    for (auto z : roots) e.push_back(z.real());
    std::sort(e.rbegin(), e.rend());
    // Two real components, each contributing the real period of the lattice.
    return 2.0 * pi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]));
  }
  std::size_t real_idx = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(roots[i].imag()) < std::abs(roots[real_idx].imag())) real_idx = i;
  }
  double e1 = roots[real_idx].real();
  std::complex<double> e2 = roots[(real_idx + 1) % 3];
  if (e2.imag() < 0) e2 = std::conj(e2);
  std::complex<double> s = std::sqrt(std::complex<double>(e1) - e2);
  return pi / agm(s.real(), std::abs(s));
}

}  // namespace betti::oracle
