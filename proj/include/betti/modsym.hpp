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

// Manin-symbol presentation of H_1(X_0(N), cusps; Q) and the normalized
// period functionals r -> [r]^+- of a rational newform.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betti/arith.hpp"
#include "betti/curve.hpp"
#include "betti/linalg.hpp"

namespace betti {

/// Point of P^1(Q); den == 0 encodes the cusp at infinity.
struct Cusp {
  Int num;
  Int den;

  static Cusp infinity() { return {Int(1), Int(0)}; }
  static Cusp from(const Rat& r) { return {r.num(), r.den()}; }
  bool is_infinity() const { return den == 0; }
};

// Signed Manin symbol occurrence in a path decomposition.
struct ManinTerm {
  std::size_t index;
  int sign;
};

class ModularSymbolSpace {
 public:
  static std::shared_ptr<const ModularSymbolSpace> build(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t num_symbols() const { return symbols_.size(); }
  std::pair<std::int64_t, std::int64_t> symbol(std::size_t i) const {
    return symbols_[i];
  }
  // Index of the class of (c : d); gcd(c, d, N) must be 1.
  std::size_t index_of(std::int64_t c, std::int64_t d) const;
  const std::vector<std::size_t>& basis() const { return basis_; }
  // Image of Manin symbol i in the quotient, in basis coordinates.
  const std::vector<Rat>& coords(std::size_t i) const { return coords_[i]; }

  // Heilbronn-matrix realization of T_l (l prime, l not dividing N). The
  // matrix acts on column coordinate vectors. Memoized.
  const Matrix& hecke_matrix(std::int64_t l) const;
  // Involution induced by z -> -conj(z): (c : d) -> (-c : d).
  const Matrix& star_matrix() const;

  // Signed Manin symbols whose sum is the path {oo, r}.
  std::vector<ManinTerm> path_from_infinity(const Cusp& r) const;
  // Coordinates of the path {alpha, beta}.
  std::vector<Rat> path_coords(const Cusp& alpha, const Cusp& beta) const;

  // Relation generators applied to symbol i, for invariant checks:
  // x + x S and x + x tau + x tau^2 in symbol indices.
  std::pair<std::size_t, std::size_t> s_relation(std::size_t i) const;
  std::array<std::size_t, 3> tau_relation(std::size_t i) const;

 private:
  explicit ModularSymbolSpace(std::int64_t level);

  std::int64_t level_;
  std::vector<std::pair<std::int64_t, std::int64_t>> symbols_;
  std::vector<std::int32_t> lookup_;  // N*N table, -1 off P^1(Z/N)
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Rat>> coords_;

  mutable std::mutex mu_;
  mutable std::map<std::int64_t, Matrix> hecke_;
  mutable std::optional<Matrix> star_;
};

// Integer matrices [a b; c d] with a > b >= 0, d > c >= 0, ad - bc = n.
std::vector<std::array<std::int64_t, 4>> heilbronn_matrices(std::int64_t n);

enum class ScalingMode { kIntegral, kPeriodCalibrated };
const char* to_string(ScalingMode m);

/// Sign-(+/-) eigen-functional of a rational newform on the symbol space.
/// Integral normalization: its values on every Manin symbol are integers
/// with gcd 1. The + functional is oriented so [0]^+ >= 0 (first nonzero
/// symbol value positive when [0]^+ = 0); the - functional has its first
/// nonzero symbol value positive.
struct EigenSymbol {
  std::shared_ptr<const ModularSymbolSpace> space;
  int sign = 1;
  std::vector<Rat> functional;   // on basis coordinates
  std::vector<Int> manin_values; // on every Manin symbol
  ScalingMode mode = ScalingMode::kIntegral;
  std::optional<Rat> calibration;

  // Scalar applied on top of the integral values.
  Rat scale() const {
    return mode == ScalingMode::kPeriodCalibrated && calibration ? *calibration
                                                                 : Rat(1);
  }
  EigenSymbol with_calibration(const Rat& lambda) const;
  EigenSymbol integral() const;
};

// Good primes l <= bound used to cut out the eigenspace.
inline constexpr std::int64_t kEigenPrimeBound = 20;

/// Throws PreconditionError("not new / ambiguous") unless the simultaneous
/// eigenspace is one-dimensional.
EigenSymbol eigen_symbol(std::shared_ptr<const ModularSymbolSpace> space,
                         const CurveData& curve, int sign);

/// [r]^sign: value on the path {oo -> r}.
Rat symbol_value(const EigenSymbol& eigen, const Rat& r);
Rat symbol_value_at_infinity(const EigenSymbol& eigen);

/// The functional on an arbitrary path {alpha, beta}.
Rat pairing(const EigenSymbol& eigen, const std::vector<Rat>& path_coords);

// Classical genus and cusp count of X_0(N).
std::int64_t genus_x0(std::int64_t n);
std::int64_t cusps_x0(std::int64_t n);

/// Outcome of matching lambda * [0]^+ to the numeric L(E,1)/Omega^+.
struct Calibration {
  bool determined = false;
  Rat lambda;
  double numeric_ratio = 0.0;
  double relative_error = 0.0;
  std::string note;
};

/// Rational lambda with lambda * [0]^+_int = L(E,1)/Omega^+ (within 1e-6
/// relative, numerator and denominator <= 1e6). A vanishing [0]^+ with a
/// vanishing L-value is reported undetermined; any other mismatch throws.
Calibration calibrate_periods(const EigenSymbol& eigen, const CurveData& curve);

/// Both sign components for one curve; the unit consumed by theta elements,
/// p-adic towers and Kurihara numbers.
struct CurveSymbols {
  CurveData curve;
  std::shared_ptr<const ModularSymbolSpace> space;
  EigenSymbol plus;
  EigenSymbol minus;
};

CurveSymbols curve_symbols(const CurveData& curve);

}  // namespace betti
