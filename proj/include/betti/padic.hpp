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

// p-stabilized theta towers at finite level and Iwasawa invariants read
// from them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betti/group_ring.hpp"
#include "betti/mazur_tate.hpp"

namespace betti {

/// Layers theta^alpha_n on (Z/p^n)^x for n = 1..n_max, coefficients mod p^k.
struct PadicThetaTower {
  std::string label;
  std::int64_t p = 3;
  int k = 1;
  std::int64_t modulus = 3;  // p^k
  ModInt alpha;
  NormVariant variant = NormVariant::kA;
  ModInt theta_q;                    // theta at level 1, mod p^k
  std::vector<ModGroupRing> layers;  // layers[n - 1]
  std::vector<RatGroupRing> raw;     // exact theta_{p^n}; empty for synthetic towers

  int n_max() const { return static_cast<int>(layers.size()); }
  const ModGroupRing& layer(int n) const { return layers.at(n - 1); }
  // Every layer (and theta_q) multiplied by s.
  PadicThetaTower scaled(const ModInt& s) const;
};

/// theta^alpha_n = alpha^{-n} (theta_{p^n} - c nu(theta_{p^{n-1}})) with
/// c = 1/alpha for variant A and c = p/alpha for variant B. The + and -
/// parts are combined. Throws NonOrdinaryError for bad or non-ordinary p and
/// PrecisionError for coefficients that are not p-integral.
PadicThetaTower stabilize(ThetaCache& cache, std::int64_t p, int k, int n_max,
                          NormVariant variant = NormVariant::kA);

/// Tower from given layers (layer n on modulus p^n), for synthetic tests.
PadicThetaTower tower_from_layers(std::int64_t p, int k,
                                  std::vector<ModGroupRing> layers);

struct ProjectivityReport {
  bool holds = true;
  int failing_layer = -1;        // n with pi(layer n+1) != layer n
  std::int64_t witness = -1;     // first differing unit
};
ProjectivityReport check_projectivity(const PadicThetaTower& t);

struct TrivialInterpolation {
  ModInt augmentation;           // of layer 1
  ModInt expected;               // (1 - 1/alpha)^2 theta_Q
  bool layers_agree = true;      // augmentation independent of n
  bool holds = false;
  int discrepant_layer = -1;
};
TrivialInterpolation interpolate_trivial(const PadicThetaTower& t);

struct CharacterInterpolation {
  int n = 0;
  CycResidue lhs;  // chi(theta^alpha_n)
  CycResidue rhs;  // alpha^{-n} chi(theta_{p^n}) via exact arithmetic
  bool holds = false;
};
/// chi of conductor p^n (modulus p^n), 1 <= n <= n_max.
CharacterInterpolation interpolate_character(const PadicThetaTower& t,
                                             const DirichletCharacter& chi);

/// Image of a layer in Z/p^k[Gamma_n] (Gamma_n = (1+pZ)/(1+p^nZ), generator
/// 1+p), i.e. the trivial tame component, as coefficients c_j of gamma^j.
std::vector<ModInt> tame_trivial_component(const ModGroupRing& layer, std::int64_t p);

/// Coefficients b_i of sum_j c_j (1+T)^j.
std::vector<ModInt> to_t_expansion(const std::vector<ModInt>& c);

struct IwasawaInvariants {
  int lambda = 0;
  int mu = 0;
  int layer = 0;  // layer at which the reading stabilized
  int precision = 0;
  bool stable = false;
};

struct LayerReading {
  int lambda = 0;
  int mu = 0;
};
// Throws PrecisionError when every coefficient vanishes mod p^k.
LayerReading read_layer(const PadicThetaTower& t, int n);

/// Needs at least three layers; reads the top two and requires agreement.
IwasawaInvariants iwasawa_invariants(const PadicThetaTower& t);

}  // namespace betti
