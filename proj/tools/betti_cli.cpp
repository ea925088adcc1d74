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

// betti: command-line front end.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betti/curve.hpp"
#include "betti/errors.hpp"
#include "betti/kernels.hpp"
#include "betti/kurihara.hpp"
#include "betti/mazur_tate.hpp"
#include "betti/modsym.hpp"
#include "betti/numtheory.hpp"
#include "betti/padic.hpp"
#include "betti/qexp.hpp"
#include "betti/report.hpp"
#include "betti/suites.hpp"

namespace {

using namespace betti;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string s(std::int64_t v) { return std::to_string(v); }

struct Globals {
  std::string catalog;
  bool json = false;
  bool no_timing = false;
  int threads = 0;
};

std::vector<CurveData> load(const Globals& g) {
  return g.catalog.empty() ? bundled_catalog() : load_catalog(g.catalog);
}

CurveData resolve(const std::vector<CurveData>& cat, const std::string& label) {
  const CurveData* c = find_curve(cat, label);
  if (!c) throw PreconditionError("unknown curve label: " + label);
  return *c;
}

CurveSymbols symbols_for(const CurveData& c, const std::string& mode) {
  if (mode == "integral") return curve_symbols(c);
  if (mode == "calibrated") return calibrated(curve_symbols(c));
  throw PreconditionError("mode must be integral or calibrated, got " + mode);
}

// ------------------------------------------------------------------ curve

struct CurveArgs {
  std::string label;
  std::vector<std::int64_t> model;
  std::int64_t conductor = 0;
  std::int64_t ap_bound = 20;
};

void cmd_curve(const Globals& g, const CurveArgs& a, RunReport& rep) {
  CurveData curve;
  if (!a.model.empty()) {
    if (a.model.size() != 5) throw PreconditionError("--model needs a1,a2,a3,a4,a6");
    if (a.conductor < 1) throw PreconditionError("--model needs --conductor");
    curve = make_curve(a.label.empty() ? "inline" : a.label,
                       {a.model[0], a.model[1], a.model[2], a.model[3], a.model[4]},
                       a.conductor);
  } else {
    if (a.label.empty()) throw PreconditionError("curve: give a label or --model");
    curve = resolve(load(g), a.label);
  }
  rep.inputs["label"] = curve.label;
  rep.inputs["ap_bound"] = s(a.ap_bound);
  json model = json::array();
  for (auto v : curve.a) model.push_back(s(v));
  rep.outputs["model"] = model;
  rep.outputs["conductor"] = s(curve.conductor);
  rep.outputs["discriminant"] = curve.discriminant().get_str();
  auto w = curve.root_number();
  rep.outputs["root_number"] = w ? s(*w) : "unknown";
  json bad = json::array();
  for (auto [p, e] : nt::factorize(curve.conductor)) {
    (void)e;
    bad.push_back(json{{"p", s(p)}, {"reduction", to_string(reduction_type(curve, p))}});
  }
  rep.outputs["bad_primes"] = bad;
  json table = json::array();
  std::string hasse;
  for (std::int64_t l : nt::primes_up_to(a.ap_bound)) {
    std::int64_t al = ap(curve, l);
    table.push_back(json{{"l", s(l)}, {"a_l", s(al)},
                         {"euler_factor", euler_factor(curve, l).to_string()}});
    if (!curve.is_bad(l) && al * al > 4 * l && hasse.empty()) {
      hasse = "a_" + s(l) + " = " + s(al);
    }
  }
  rep.outputs["a_l"] = table;
  rep.check("Hasse bound |a_l| <= 2 sqrt(l) at good l", hasse.empty(), hasse);
}

// ------------------------------------------------------------------- msym

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    Int num(text.substr(0, slash));
    Int den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    if (den != 0) return Rat(num, den);
  } catch (const std::invalid_argument&) {
  }
  throw PreconditionError("not a rational number: " + text);
}

void cmd_msym(const Globals& g, const std::string& label, const std::vector<std::string>& at,
              RunReport& rep) {
  const CurveData curve = resolve(load(g), label);
  rep.inputs["label"] = label;
  auto cs = curve_symbols(curve);
  const auto& sp = *cs.space;
  rep.outputs["level"] = s(sp.level());
  rep.outputs["manin_symbols"] = s(static_cast<std::int64_t>(sp.num_symbols()));
  rep.outputs["dimension"] = s(static_cast<std::int64_t>(sp.dimension()));
  rep.outputs["genus"] = s(genus_x0(sp.level()));
  rep.outputs["cusps"] = s(cusps_x0(sp.level()));
  rep.check("dimension = 2 genus + cusps - 1",
            static_cast<std::int64_t>(sp.dimension()) ==
                2 * genus_x0(sp.level()) + cusps_x0(sp.level()) - 1,
            "dimension " + s(static_cast<std::int64_t>(sp.dimension())));
  rep.outputs["zero_plus"] = symbol_value(cs.plus, Rat(0)).to_string();
  auto cal = calibrate_periods(cs.plus, curve);
  rep.outputs["calibration"] = json{{"determined", cal.determined ? "yes" : "no"},
                                    {"lambda", cal.determined ? cal.lambda.to_string() : ""},
                                    {"note", cal.note}};
  json hecke = json::array();
  for (std::int64_t l : nt::primes_up_to(kEigenPrimeBound)) {
    if (curve.is_bad(l)) continue;
    const Matrix& t = sp.hecke_matrix(l);
    // phi(T v) = a_l phi(v) for both signs.
    std::string bad;
    const Rat al(static_cast<long>(ap(curve, l)));
    for (const auto* e : {&cs.plus, &cs.minus}) {
      auto lhs = t.apply_left(e->functional);
      for (std::size_t j = 0; j < lhs.size() && bad.empty(); ++j) {
        if (lhs[j] != al * e->functional[j]) {
          bad = "sign " + s(e->sign) + " basis " + s(static_cast<std::int64_t>(j));
        }
      }
    }
    hecke.push_back(json{{"l", s(l)}, {"a_l", s(ap(curve, l))}});
    rep.check("eigen-symbol: T_" + s(l) + " acts by a_" + s(l), bad.empty(), bad);
  }
  rep.outputs["hecke"] = hecke;
  json values = json::array();
  for (const auto& r : at) {
    Rat x = parse_rat(r);
    values.push_back(json{{"r", x.to_string()},
                          {"plus", symbol_value(cs.plus, x).to_string()},
                          {"minus", symbol_value(cs.minus, x).to_string()}});
  }
  if (!at.empty()) rep.outputs["values"] = values;
}

// ------------------------------------------------------------------ theta

void cmd_theta(const Globals& g, const std::string& label, std::int64_t m,
               const std::string& mode, const std::vector<std::int64_t>& norm_ls,
               std::int64_t integrality_p, RunReport& rep) {
  const CurveData curve = resolve(load(g), label);
  rep.inputs["label"] = label;
  rep.inputs["M"] = s(m);
  rep.inputs["mode"] = mode;
  ThetaCache cache(symbols_for(curve, mode));
  const ThetaElement& t = cache.get(m);
  json coeffs = json::array();
  std::string cov;
  for (std::size_t i = 0; i < t.plus.size(); ++i) {
    std::int64_t a = t.plus.units()[i];
    coeffs.push_back(json{{"a", s(a)},
                          {"plus", t.plus.at(i).to_string()},
                          {"minus", t.minus.at(i).to_string()},
                          {"theta", (t.plus.at(i) + t.minus.at(i)).to_string()}});
    Rat conj = t.total().coeff(nt::mod(-a, m));
    if (conj != t.plus.at(i) - t.minus.at(i) && cov.empty()) cov = "a=" + s(a);
  }
  rep.outputs["coefficients"] = coeffs;
  rep.outputs["augmentation"] = t.total().augmentation().to_string();
  rep.check("conjugation covariance: theta(-a) = [a/M]^+ - [a/M]^-", cov.empty(), cov);
  for (std::int64_t l : norm_ls) {
    if (!nt::is_prime(l)) throw PreconditionError("--norm-l: " + s(l) + " is not prime");
    if (curve.is_bad(l)) throw PreconditionError("--norm-l: " + s(l) + " divides the conductor");
    auto r = check_norm_relation(cache, m, l);
    rep.outputs["norm_relation"].push_back(
        json{{"l", s(l)}, {"a_l", s(r.a_l)}, {"verdict", r.verdict},
             {"A", r.holds_a ? "holds" : "fails at a=" + s(r.witness_a)},
             {"B", r.holds_b ? "holds" : "fails at a=" + s(r.witness_b)}});
    rep.check("norm relation M=" + s(m) + " l=" + s(l) + ": a variant holds",
              r.verdict != "neither", "A fails at a=" + s(r.witness_a));
  }
  if (integrality_p > 0) {
    int n = 0;
    std::int64_t q = 1;
    while (q < m) {
      q *= integrality_p;
      ++n;
    }
    if (q != m) throw PreconditionError("--integrality: M must be a power of p");
    auto ir = integrality_report(cache, integrality_p, n);
    rep.outputs["integrality"] = json{{"p", s(ir.p)}, {"n", s(ir.n)},
                                      {"p_integral", ir.p_integral ? "yes" : "no"},
                                      {"clearing_exponent", s(ir.clearing_exponent)}};
  }
}

// ---------------------------------------------------------------- plfunc

void cmd_plfunc(const Globals& g, const std::string& label, std::int64_t p, int k, int n,
                RunReport& rep) {
  const CurveData curve = resolve(load(g), label);
  rep.inputs["label"] = label;
  rep.inputs["p"] = s(p);
  rep.inputs["k"] = s(k);
  rep.inputs["n_max"] = s(n);
  ThetaCache cache(curve_symbols(curve));
  auto tower = stabilize(cache, p, k, n);
  rep.outputs["alpha"] = to_json(tower.alpha);
  rep.outputs["theta_Q"] = to_json(tower.theta_q);
  json layers = json::array();
  for (int i = 1; i <= tower.n_max(); ++i) {
    auto t = to_t_expansion(tame_trivial_component(tower.layer(i), p));
    json ts = json::array();
    for (const auto& c : t) ts.push_back(to_json(c));
    layers.push_back(json{{"n", s(i)},
                          {"augmentation", to_json(tower.layer(i).augmentation())},
                          {"t_expansion", ts}});
  }
  rep.outputs["layers"] = layers;
  auto pr = check_projectivity(tower);
  rep.check("projectivity pi(theta_{n+1}) = theta_n mod p^" + s(k), pr.holds,
            "layer " + s(pr.failing_layer) + " at sigma_" + s(pr.witness));
  auto ti = interpolate_trivial(tower);
  rep.check("trivial interpolation (1 - 1/alpha)^2 theta_Q", ti.holds,
            ti.augmentation.to_string() + " vs " + ti.expected.to_string());
  try {
    auto inv = iwasawa_invariants(tower);
    rep.outputs["iwasawa"] = json{{"lambda", s(inv.lambda)}, {"mu", s(inv.mu)},
                                  {"layer", s(inv.layer)},
                                  {"stable", inv.stable ? "yes" : "no"}};
  } catch (const PrecisionError& e) {
    rep.outputs["iwasawa"] = json{{"unavailable", e.what()}};
  } catch (const PreconditionError& e) {
    rep.outputs["iwasawa"] = json{{"unavailable", e.what()}};
  }
}

// -------------------------------------------------------------- kurihara

void cmd_kurihara(const Globals& g, const std::string& label, std::int64_t p, int k,
                  std::int64_t bound, int nu, int rechoose, std::uint64_t seed,
                  RunReport& rep) {
  const CurveData curve = resolve(load(g), label);
  rep.inputs["label"] = label;
  rep.inputs["p"] = s(p);
  rep.inputs["k"] = s(k);
  rep.inputs["bound"] = s(bound);
  rep.inputs["nu"] = s(nu);
  auto cs = curve_symbols(curve);
  auto set = sieve_admissible(curve, p, k, bound);
  json primes = json::array();
  for (auto l : set.primes) primes.push_back(json{{"l", s(l)}, {"eta", s(set.eta.at(l))}});
  rep.outputs["admissible"] = primes;
  auto table = nonvanishing_search(cs, set, nu);
  json rows = json::array();
  for (const auto& r : table.rows) {
    json f = json::array();
    for (auto l : r.factors) f.push_back(s(l));
    int v = 0;
    if (!r.vanishes()) {
      for (std::int64_t x = r.value.value(); x % p == 0; x /= p) ++v;
    }
    rows.push_back(json{{"n", s(r.n)},
                        {"factors", f},
                        {"value", to_json(r.value)},
                        {"unit_class", r.vanishes() ? "0" : (v == 0 ? "unit" : "p^" + s(v))},
                        {"vanishes", r.vanishes() ? "yes" : "no"},
                        {"ideal", r.ideal_note}});
  }
  rep.outputs["rows"] = rows;
  rep.outputs["summary"] = table.summary;
  for (int i = 0; i < rechoose; ++i) {
    auto eta = random_primitive_roots(set, seed + static_cast<std::uint64_t>(i));
    auto other = nonvanishing_search(cs, set, nu, eta);
    std::string bad;
    for (std::size_t j = 0; j < table.rows.size() && bad.empty(); ++j) {
      if (table.rows[j].vanishes() != other.rows[j].vanishes()) bad = "n=" + s(table.rows[j].n);
    }
    rep.check("vanishing pattern invariant under primitive-root re-choice #" + s(i + 1),
              bad.empty(), bad);
  }
}

// ------------------------------------------------------------------ qexp

struct QexpArgs {
  std::string target;
  std::int64_t n = 5, a = 0, b = 1, m = 1;
  long c = 0, d = 0, compare = 0;
  int k = 1, r = 0, rp = 0;
  std::int64_t prec = 10;
};

void cmd_qexp(const QexpArgs& q, RunReport& rep) {
  rep.inputs["target"] = q.target;
  rep.inputs["prec"] = s(q.prec);
  auto pt = [&] {
    rep.inputs["point"] = json{{"a", s(q.a)}, {"b", s(q.b)}, {"N", s(q.n)}};
    return TorsionPoint::make(q.a, q.b, q.n);
  };
  if (q.target == "theta" || q.target == "unit") {
    long c = q.c ? q.c : default_c(q.n);
    rep.inputs["c"] = s(c);
    auto p = pt();
    rep.outputs["series"] =
        to_json(q.target == "theta" ? siegel_theta_qexp(p, c, q.prec) : siegel_unit_qexp(p, c, q.prec));
  } else if (q.target == "g") {
    long c = q.c ? q.c : static_cast<long>(q.n + 1);
    rep.inputs["c"] = s(c);
    auto p = pt();
    auto gg = rationalized_g_qexp(p, q.prec, c);
    rep.outputs["lead"] = gg.tag();
    rep.outputs["unit"] = to_json(gg.unit);
    if (q.compare) {
      auto g2 = rationalized_g_qexp(p, q.prec, q.compare);
      auto w = first_difference(gg.unit, g2.unit, Rat(static_cast<long>(q.prec)));
      rep.check("c-independence: c=" + s(c) + " vs c=" + s(q.compare),
                !w && gg.lead_exponent == g2.lead_exponent,
                w ? "q^" + w->to_string() : "lead exponent");
    }
  } else if (q.target == "c-relation") {
    long c = q.c ? q.c : 7, d = q.d ? q.d : 11;
    rep.inputs["c"] = s(c);
    rep.inputs["d"] = s(d);
    auto r = check_c_relation(pt(), c, d, q.prec);
    rep.outputs["lead_exponent"] = r.lhs_lead_exponent.to_string();
    rep.check("c,d relation to q^" + s(q.prec) + " beyond the leading term", r.holds,
              r.witness ? "q^" + r.witness->to_string() : "");
  } else if (q.target == "eisenstein") {
    rep.inputs["k"] = s(q.k);
    rep.outputs["series"] = to_json(eisenstein_series(pt(), q.k, q.prec));
  } else if (q.target == "eisenstein00") {
    long c = q.c ? q.c : 5, a = q.a ? static_cast<long>(q.a) : 2;
    rep.inputs["k"] = s(q.k);
    rep.inputs["c"] = s(c);
    rep.inputs["a"] = s(a);
    auto e = eisenstein_00(q.k, c, a, q.prec);
    rep.outputs["series"] = to_json(e);
    if (q.compare) {
      auto e2 = eisenstein_00(q.k, c, q.compare, q.prec);
      auto w = first_difference(e, e2, Rat(static_cast<long>(q.prec)));
      std::string name = "a-independence: a=" + s(a) + " vs a=" + s(q.compare);
      if (!w && e.is_zero()) {
        rep.vacuous(name, "both sides vanish identically");
      } else {
        rep.check(name, !w, w ? "q^" + w->to_string() : "");
      }
    }
  } else if (q.target == "f") {
    rep.inputs["k"] = s(q.k);
    rep.outputs["series"] = to_json(f_series(q.k, pt(), q.prec));
  } else if (q.target == "zeta") {
    rep.inputs["M"] = s(q.m);
    rep.inputs["N"] = s(q.n);
    rep.inputs["k"] = s(q.k);
    rep.inputs["r"] = s(q.r);
    rep.inputs["r_prime"] = s(q.rp);
    auto z = zeta_modular_form(q.m, q.n, q.k, q.r, q.rp, q.prec);
    if (z.f_branch) rep.outputs["f_branch"] = to_json(*z.f_branch);
    if (z.e_branch) rep.outputs["e_branch"] = to_json(*z.e_branch);
  } else {
    throw PreconditionError("unknown qexp target: " + q.target);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular symbols, theta elements, p-adic towers, Kurihara numbers "
               "and Eisenstein q-expansions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--catalog", g.catalog, "Curve catalog file (default: bundled)");
  app.add_flag("--json", g.json, "Structured JSON output");
  app.add_flag("--no-timing", g.no_timing, "Omit the timing field");
  app.add_option("--threads", g.threads, "OpenMP threads (0: runtime default)")
      ->check(CLI::NonNegativeNumber);

  CurveArgs ca;
  auto* curve = app.add_subcommand("curve", "Model, reduction types, a_l and Euler factors");
  curve->add_option("label", ca.label, "Catalog label");
  curve->add_option("--model", ca.model, "Inline a1,a2,a3,a4,a6")->delimiter(',')->expected(5);
  curve->add_option("--conductor", ca.conductor, "Conductor for --model");
  curve->add_option("--ap-bound", ca.ap_bound, "List a_l for l up to this")
      ->check(CLI::Range(2, 20000));

  std::string label;
  std::vector<std::string> at;
  auto* msym = app.add_subcommand("msym", "Modular symbol space and eigen-symbols");
  msym->add_option("label", label)->required();
  msym->add_option("--at", at, "Evaluate [r]^+- at these rationals (p/q)");

  std::int64_t m = 1, integrality_p = 0;
  std::string mode = "integral";
  std::vector<std::int64_t> norm_ls;
  auto* theta = app.add_subcommand("theta", "Mazur-Tate element at modulus M");
  theta->add_option("label", label)->required();
  theta->add_option("-M,--modulus", m)->check(CLI::Range(1, 100000));
  theta->add_option("--mode", mode)->check(CLI::IsMember({"integral", "calibrated"}));
  theta->add_option("--norm-l", norm_ls, "Check the norm relation for these primes");
  theta->add_option("--integrality", integrality_p, "Integrality report at p (M = p^n)");

  std::int64_t p = 3;
  int k = 4, n = 3;
  auto* plf = app.add_subcommand("plfunc", "p-stabilized tower, interpolation, lambda/mu");
  plf->add_option("label", label)->required();
  plf->add_option("-p", p)->required();
  plf->add_option("-k", k)->check(CLI::Range(1, 12));
  plf->add_option("-n", n)->check(CLI::Range(1, 8));

  std::int64_t bound = 500;
  int nu = 1, rechoose = 0;
  std::uint64_t seed = 1;
  auto* kur = app.add_subcommand("kurihara", "Admissible primes and Kurihara numbers");
  kur->add_option("label", label)->required();
  kur->add_option("-p", p)->required();
  kur->add_option("-k", k)->check(CLI::Range(1, 12));
  kur->add_option("--bound", bound);
  kur->add_option("--nu", nu, "Maximal number of prime factors of n")->check(CLI::Range(0, 4));
  kur->add_option("--rechoose", rechoose, "Random primitive-root re-choices to compare");
  kur->add_option("--seed", seed);

  QexpArgs qa;
  auto* qex = app.add_subcommand("qexp", "Theta / Siegel / Eisenstein q-expansions");
  qex->add_option("target", qa.target,
                  "theta | unit | g | c-relation | eisenstein | eisenstein00 | f | zeta")
      ->required();
  qex->add_option("-N", qa.n, "Level of the torsion point (zeta: N)");
  qex->add_option("-a", qa.a, "Torsion point a/N (eisenstein00: auxiliary a)");
  qex->add_option("-b", qa.b, "Torsion point b/N");
  qex->add_option("-c", qa.c);
  qex->add_option("-d", qa.d);
  qex->add_option("-k", qa.k);
  qex->add_option("-M", qa.m, "zeta: M");
  qex->add_option("-r", qa.r, "zeta: r");
  qex->add_option("--rp", qa.rp, "zeta: r'");
  qex->add_option("--compare", qa.compare, "Second c (g) or a (eisenstein00) to compare");
  qex->add_option("--prec", qa.prec)->check(CLI::Range(1, 400));

  std::string suite;
  SuiteOptions so;
  std::int64_t vprec = 0;
  auto* ver = app.add_subcommand("verify", "Run a named identity suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--curves", so.curves)->delimiter(',');
  ver->add_option("--max-ml", so.max_ml);
  ver->add_option("--max-l", so.max_l);
  ver->add_option("--max-conductor", so.max_conductor);
  ver->add_option("-k", so.k)->check(CLI::Range(1, 12));
  ver->add_option("-n", so.n_max)->check(CLI::Range(1, 8));
  ver->add_option("--char-layers", so.char_layers)->check(CLI::Range(0, 4));
  ver->add_option("-N", so.level)->check(CLI::Range(2, 60));
  ver->add_option("--prec", vprec)->check(CLI::Range(1, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  kernels::set_threads(g.threads);
  RunReport rep;
  {
    std::ostringstream cmd;
    for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
    rep.command = cmd.str();
  }
  auto start = std::chrono::steady_clock::now();
  try {
    if (*curve) {
      cmd_curve(g, ca, rep);
    } else if (*msym) {
      cmd_msym(g, label, at, rep);
    } else if (*theta) {
      cmd_theta(g, label, m, mode, norm_ls, integrality_p, rep);
    } else if (*plf) {
      cmd_plfunc(g, label, p, k, n, rep);
    } else if (*kur) {
      cmd_kurihara(g, label, p, k, bound, nu, rechoose, seed, rep);
    } else if (*qex) {
      cmd_qexp(qa, rep);
    } else if (*ver) {
      so.prec = vprec;
      rep.inputs["suite"] = suite;
      run_suite(suite, load(g), so, rep);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  rep.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (g.json) {
    std::cout << rep.to_json(!g.no_timing).dump(2) << "\n";
  } else {
    std::cout << rep.to_text(!g.no_timing);
  }
  return rep.ok() ? 0 : kExitFail;
}
