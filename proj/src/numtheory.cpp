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

#include "betti/numtheory.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "betti/errors.hpp"

namespace betti::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd(a, b)) * b;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      (static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  base = mod(base, m);
  if (exp < 0) {
    base = invmod(base, m);
    exp = -exp;
  }
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = mod(a, m);
  // Extended Euclid on (m, r).
  while (r != 0) {
    std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) {
    throw PreconditionError("invmod: " + std::to_string(a) +
                            " is not invertible mod " + std::to_string(m));
  }
  return mod(x, m);
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t c = std::max<std::int64_t>(n + 1, 2);
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

bool is_squarefree(std::int64_t n) {
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return n != 0;
}

std::vector<std::int64_t> units_mod(std::int64_t m) {
  if (m == 1) return {0};
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < m; ++a) {
    if (gcd(a, m) == 1) out.push_back(a);
  }
  return out;
}

std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  std::int64_t order = euler_phi(m);
  for (auto [p, e] : factorize(order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, order / p, m) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

bool is_primitive_root(std::int64_t g, std::int64_t p) {
  if (gcd(g, p) != 1) return false;
  return mult_order(g, p) == p - 1;
}

std::int64_t primitive_root(std::int64_t p) {
  if (!is_prime(p)) {
    throw PreconditionError("primitive_root: " + std::to_string(p) +
                            " is not prime");
  }
  if (p == 2) return 1;
  for (std::int64_t g = 2; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  return 1;
}

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace betti::nt
