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

#include "betti/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "betti/errors.hpp"
#include "betti/numtheory.hpp"

namespace betti {

std::optional<std::int64_t> ApCache::get(std::int64_t l) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = values_.find(l);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ApCache::put(std::int64_t l, std::int64_t a) {
  std::lock_guard<std::mutex> lock(mu_);
  values_[l] = a;
}

std::map<std::int64_t, std::int64_t> ApCache::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return values_;
}

const char* to_string(Reduction r) {
  switch (r) {
    case Reduction::kGood: return "good";
    case Reduction::kSplit: return "split multiplicative";
    case Reduction::kNonsplit: return "nonsplit multiplicative";
    case Reduction::kAdditive: return "additive";
  }
  return "?";
}

Int CurveData::discriminant() const {
  Int a1v(static_cast<long>(a[0])), a2v(static_cast<long>(a[1])),
      a3v(static_cast<long>(a[2])), a4v(static_cast<long>(a[3])),
      a6v(static_cast<long>(a[4]));
  Int b2 = a1v * a1v + 4 * a2v;
  Int b4 = 2 * a4v + a1v * a3v;
  Int b6 = a3v * a3v + 4 * a6v;
  Int b8 = a1v * a1v * a6v + 4 * a2v * a6v - a1v * a3v * a4v +
           a2v * a3v * a3v - a4v * a4v;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

std::optional<int> CurveData::root_number() const {
  if (!fricke_sign) return std::nullopt;
  return -*fricke_sign;
}

CurveData make_curve(std::string label, std::array<std::int64_t, 5> a,
                     std::int64_t conductor, std::optional<int> fricke_sign) {
  CurveData c;
  c.label = std::move(label);
  c.a = a;
  c.conductor = conductor;
  c.fricke_sign = fricke_sign;
  if (c.discriminant() == 0) {
    throw PreconditionError("curve " + c.label + ": singular model (discriminant 0)");
  }
  if (conductor < 1) throw PreconditionError("curve " + c.label + ": bad conductor");
  return c;
}

std::int64_t count_reduced_points(const CurveData& curve, std::int64_t l) {
  if (!nt::is_prime(l)) {
    throw PreconditionError("count_points: " + std::to_string(l) + " is not prime");
  }
  auto m = [l](std::int64_t v) { return nt::mod(v, l); };
  std::int64_t a1 = m(curve.a1()), a2 = m(curve.a2()), a3 = m(curve.a3()),
               a4 = m(curve.a4()), a6 = m(curve.a6());
  std::int64_t count = 1;  // point at infinity
  if (l == 2) {
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        std::int64_t lhs = y * y + a1 * x * y + a3 * y;
        std::int64_t rhs = x * x * x + a2 * x * x + a4 * x + a6;
        if (m(lhs - rhs) == 0) ++count;
      }
    }
    return count;
  }
  // Completing the square: #y = 1 + (D(x) / l) with
  // D = (a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6).
  std::vector<signed char> chi(l, -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y < l; ++y) chi[nt::mulmod(y, y, l)] = 1;
  for (std::int64_t x = 0; x < l; ++x) {
    std::int64_t lin = m(a1 * x + a3);
    std::int64_t cubic = m(m(m(x * x) * x) + m(a2 * m(x * x)) + m(a4 * x) + a6);
    std::int64_t d = m(m(lin * lin) + 4 * cubic);
    count += 1 + chi[d];
  }
  return count;
}

std::int64_t count_points(const CurveData& curve, std::int64_t l,
                          std::int64_t bound) {
  if (!nt::is_prime(l)) {
    throw PreconditionError("count_points: " + std::to_string(l) + " is not prime");
  }
  if (curve.is_bad(l)) {
    throw PreconditionError("count_points: bad prime " + std::to_string(l) +
                            " for " + curve.label + " (use bad_ap)");
  }
  if (l > bound) {
    throw PreconditionError("count_points: bound exceeded (" + std::to_string(l) +
                            " > " + std::to_string(bound) + ")");
  }
  if (auto cached = curve.ap_cache->get(l)) return *cached;
  std::int64_t a = l + 1 - count_reduced_points(curve, l);
  curve.ap_cache->put(l, a);
  return a;
}

namespace {

struct SingularPoint {
  std::int64_t x, y;
};

std::optional<SingularPoint> singular_point(const CurveData& c, std::int64_t l) {
  auto m = [l](std::int64_t v) { return nt::mod(v, l); };
  for (std::int64_t x = 0; x < l; ++x) {
    for (std::int64_t y = 0; y < l; ++y) {
      std::int64_t f = m(y * y + c.a1() * m(x * y) + c.a3() * y - m(x * x) * x -
                         c.a2() * m(x * x) - c.a4() * x - c.a6());
      if (f != 0) continue;
      std::int64_t fx = m(c.a1() * y - 3 * m(x * x) - 2 * c.a2() * x - c.a4());
      std::int64_t fy = m(2 * y + c.a1() * x + c.a3());
      if (fx == 0 && fy == 0) return SingularPoint{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

Reduction reduction_type(const CurveData& curve, std::int64_t l) {
  if (!nt::is_prime(l)) {
    throw PreconditionError("reduction_type: " + std::to_string(l) + " is not prime");
  }
  auto sp = singular_point(curve, l);
  if (!sp) return Reduction::kGood;
  // Tangent cone v^2 + a1 u v - (3 x0 + a2) u^2 at the singular point.
  std::int64_t a1 = nt::mod(curve.a1(), l);
  std::int64_t c = nt::mod(3 * sp->x + curve.a2(), l);
  if (l == 2) {
    if (a1 == 0) return Reduction::kAdditive;
    return c == 0 ? Reduction::kSplit : Reduction::kNonsplit;
  }
  std::int64_t disc = nt::mod(a1 * a1 + 4 * c, l);
  if (disc == 0) return Reduction::kAdditive;
  return nt::legendre(disc, l) == 1 ? Reduction::kSplit : Reduction::kNonsplit;
}

int bad_ap(const CurveData& curve, std::int64_t l) {
  if (!curve.is_bad(l)) {
    throw PreconditionError("bad_ap: " + std::to_string(l) +
                            " does not divide the conductor of " + curve.label);
  }
  if (auto cached = curve.ap_cache->get(l)) return static_cast<int>(*cached);
  int a = 0;
  switch (reduction_type(curve, l)) {
    case Reduction::kSplit: a = 1; break;
    case Reduction::kNonsplit: a = -1; break;
    case Reduction::kAdditive: a = 0; break;
    case Reduction::kGood:
      throw PreconditionError("bad_ap: model of " + curve.label + " has good reduction at " +
                              std::to_string(l) + " despite l | N");
  }
  curve.ap_cache->put(l, a);
  return a;
}

std::int64_t ap(const CurveData& curve, std::int64_t l, std::int64_t bound) {
  return curve.is_bad(l) ? bad_ap(curve, l) : count_points(curve, l, bound);
}

std::vector<std::int64_t> an_coefficients(const CurveData& curve,
                                          std::int64_t bound) {
  std::vector<std::int64_t> a(bound + 1, 0);
  if (bound >= 1) a[1] = 1;
  // Smallest-prime-factor sieve, then a_{p^k m} = a_{p^k} a_m.
  std::vector<std::int64_t> spf(bound + 1, 0);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= bound; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  for (std::int64_t n = 2; n <= bound; ++n) {
    std::int64_t p = spf[n], m = n, pk = 1;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      pk *= p;
      ++k;
    }
    if (m > 1) {
      a[n] = a[pk] * a[m];
      continue;
    }
    std::int64_t app = ap(curve, p, std::max(bound, kDefaultPointCountBound));
    if (k == 1) {
      a[n] = app;
    } else if (curve.is_bad(p)) {
      a[n] = app * a[n / p];
    } else {
      a[n] = app * a[n / p] - p * a[n / (p * p)];
    }
  }
  return a;
}

std::int64_t EulerFactor::evaluate(std::int64_t x) const {
  std::int64_t r = 0, xp = 1;
  for (auto c : coeffs) {
    r += c * xp;
    xp *= x;
  }
  return r;
}

std::string EulerFactor::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = coeffs[i];
    if (c == 0 && i > 0) continue;
    if (i == 0) {
      os << c;
      continue;
    }
    os << (c < 0 ? " - " : " + ");
    std::int64_t ac = c < 0 ? -c : c;
    if (ac != 1) os << ac << "*";
    os << (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return os.str();
}

EulerFactor euler_factor(const CurveData& curve, std::int64_t l) {
  EulerFactor f;
  f.prime = l;
  std::int64_t a = ap(curve, l);
  if (curve.is_bad(l)) {
    f.coeffs = {1, -a};
  } else {
    f.coeffs = {1, -a, l};
  }
  return f;
}

CurveData parse_catalog_line(const std::string& line, int line_number) {
  static const std::regex re(
      R"(^\s*(\S+)\s+\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s+(\d+)\s+([+\-?])((?:\s+\S+)*)\s*$)");
  std::smatch m;
  if (!std::regex_match(line, m, re)) {
    throw ParseError(line_number, "malformed catalog record: '" + line + "'");
  }
  std::array<std::int64_t, 5> a{};
  std::int64_t conductor = 0;
  try {
    for (int i = 0; i < 5; ++i) a[i] = std::stoll(m[2 + i].str());
    conductor = std::stoll(m[7].str());
  } catch (const std::out_of_range&) {
    throw ParseError(line_number, "coefficient out of range");
  }
  std::optional<int> fricke;
  if (m[8] == "+") fricke = 1;
  if (m[8] == "-") fricke = -1;
  CurveData c;
  try {
    c = make_curve(m[1].str(), a, conductor, fricke);
  } catch (const PreconditionError& e) {
    throw ParseError(line_number, e.what());
  }
  std::istringstream extras(m[9].str());
  std::string tok;
  try {
    while (extras >> tok) {
      if (tok.rfind("rank=", 0) == 0) {
        c.known_rank = std::stoi(tok.substr(5));
      } else if (tok.rfind("ap=", 0) == 0) {
        std::istringstream items(tok.substr(3));
        std::string item;
        while (std::getline(items, item, ',')) {
          auto colon = item.find(':');
          if (colon == std::string::npos) {
            throw ParseError(line_number, "bad ap entry '" + item + "'");
          }
          std::int64_t l = std::stoll(item.substr(0, colon));
          std::int64_t v = std::stoll(item.substr(colon + 1));
          if (!nt::is_prime(l)) throw ParseError(line_number, "ap key is not prime");
          if (!c.is_bad(l) && static_cast<double>(v * v) > 4.0 * static_cast<double>(l)) {
            throw ParseError(line_number, "ap entry violates the Hasse bound");
          }
          c.ap_cache->put(l, v);
        }
      } else {
        throw ParseError(line_number, "unknown field '" + tok + "'");
      }
    }
  } catch (const std::logic_error&) {
    throw ParseError(line_number, "bad numeric field in '" + m[9].str() + "'");
  }
  return c;
}

std::vector<CurveData> parse_catalog(const std::string& text) {
  std::vector<CurveData> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    out.push_back(parse_catalog_line(line, n));
  }
  return out;
}

std::vector<CurveData> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open catalog '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::vector<CurveData> bundled_catalog() {
  return parse_catalog(bundled_catalog_text());
}

const CurveData* find_curve(const std::vector<CurveData>& catalog,
                            const std::string& label) {
  for (const auto& c : catalog) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

}  // namespace betti
