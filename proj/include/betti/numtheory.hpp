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

#include <cstdint>
#include <utility>
#include <vector>

namespace betti::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Nonnegative residue of a mod m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m);
// Inverse of a mod m; throws PreconditionError when gcd(a, m) != 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, int exp);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
std::int64_t next_prime(std::int64_t n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
bool is_squarefree(std::int64_t n);

// Units of Z/mZ in increasing order; for m = 1 this is {0}.
std::vector<std::int64_t> units_mod(std::int64_t m);

// Multiplicative order of a mod m (gcd(a, m) = 1).
std::int64_t mult_order(std::int64_t a, std::int64_t m);
bool is_primitive_root(std::int64_t g, std::int64_t p);
// Smallest primitive root modulo a prime p.
std::int64_t primitive_root(std::int64_t p);

// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);

}  // namespace betti::nt
