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

#include <doctest.h>

#include "betti/errors.hpp"
#include "betti/report.hpp"
#include "betti/suites.hpp"

using namespace betti;

TEST_CASE("report status and rendering") {
  RunReport r;
  r.command = "demo";
  r.inputs["label"] = "11a1";
  r.outputs["value"] = to_json(Rat(Int(-3), Int(6)));
  r.check("first", true);
  r.vacuous("empty", "nothing to compare");
  CHECK(r.ok());
  CHECK(r.failures() == 0);
  auto j = r.to_json(false);
  CHECK(j["outputs"]["value"] == "-1/2");
  CHECK_FALSE(j.contains("timing_ms"));
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["status"] == "vacuous");
  r.check("second", false, "a=3");
  CHECK_FALSE(r.ok());
  CHECK(r.failures() == 1);
  auto text = r.to_text(false);
  CHECK(text.find("a=3") != std::string::npos);
  CHECK(text.find("summary: 2/3") != std::string::npos);
  CHECK(r.to_json(true).contains("timing_ms"));
  CHECK(r.to_json(false).dump() == r.to_json(false).dump());
}

TEST_CASE("json shapes") {
  CHECK(to_json(ModInt(7, 9)) == "7");
  auto c = to_json(CycElt::zeta(5, 2));
  CHECK(c["conductor"] == "5");
  CHECK(c["power_basis"].size() == 4);
  auto g = to_json(RatGroupRing::delta(5, 2, Rat(3)));
  CHECK(g.size() == 4);
  CHECK(g[1]["a"] == "2");
  CHECK(g[1]["coeff"] == "3");
  auto z = to_json(QSeries::zero(1, 1, 4));
  CHECK(z["lead_exponent"].is_null());
  auto m = to_json(QSeries::monomial(3, 1, 2, CycElt::from_rat(1, Rat(5)), 9));
  CHECK(m["ramification"] == "3");
  CHECK(m["lead_exponent"] == "2/3");
}

TEST_CASE("suites run clean on small options") {
  const auto cat = bundled_catalog();
  SuiteOptions opt;
  opt.max_ml = 40;
  opt.max_l = 30;
  opt.max_conductor = 8;
  opt.k = 3;
  for (const auto& name : suite_names()) {
    RunReport r;
    run_suite(name, cat, opt, r);
    CHECK_MESSAGE(r.ok(), name);
    CHECK(!r.checks.empty());
  }
  RunReport r;
  CHECK_THROWS_AS(run_suite("nope", cat, opt, r), PreconditionError);
  opt.curves = {"99z9"};
  CHECK_THROWS_AS(run_suite("norm-relations", cat, opt, r), PreconditionError);
}
