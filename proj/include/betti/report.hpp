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

// Run reports and their JSON / text renderings. Exact values serialize as
// decimal strings; rationals as "p/q".

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "betti/arith.hpp"
#include "betti/group_ring.hpp"
#include "betti/qexp.hpp"

namespace betti {

using json = nlohmann::ordered_json;

enum class CheckStatus { kPass, kFail, kVacuous };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string witness;  // first differing coefficient or residue on failure
};

struct RunReport {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<Check> checks;
  double timing_ms = 0.0;

  void check(const std::string& name, bool pass, const std::string& witness = "");
  void vacuous(const std::string& name, const std::string& note = "");
  // Exit-code rule: true iff no check failed.
  bool ok() const;
  std::size_t failures() const;

  json to_json(bool with_timing) const;
  std::string to_text(bool with_timing) const;
};

json to_json(const Rat& r);
json to_json(const ModInt& m);
json to_json(const CycElt& c);
json to_json(const CycResidue& c);
json to_json(const RatGroupRing& x);
json to_json(const ModGroupRing& x);
json to_json(const QSeries& s);

}  // namespace betti
