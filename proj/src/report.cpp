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

#include "betti/report.hpp"

#include <sstream>

namespace betti {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kVacuous: return "vacuous";
  }
  return "?";
}

void RunReport::check(const std::string& name, bool pass, const std::string& witness) {
  checks.push_back({name, pass ? CheckStatus::kPass : CheckStatus::kFail,
                    pass ? std::string() : witness});
}

void RunReport::vacuous(const std::string& name, const std::string& note) {
  checks.push_back({name, CheckStatus::kVacuous, note});
}

std::size_t RunReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::kFail;
  return n;
}

bool RunReport::ok() const { return failures() == 0; }

json RunReport::to_json(bool with_timing) const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  json cs = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["status"] = betti::to_string(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  if (with_timing) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << timing_ms;
    j["timing_ms"] = os.str();
  }
  return j;
}

namespace {

void render(std::ostringstream& os, const std::string& key, const json& v, int depth) {
  std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      render(os, it.key(), it.value(), key.empty() ? depth : depth + 1);
    }
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    os << pad << key << ":\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        std::string line;
        for (auto it = e.begin(); it != e.end(); ++it) {
          if (!line.empty()) line += "  ";
          line += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>()
                                                           : it.value().dump());
        }
        os << pad << "  " << line << "\n";
      } else {
        os << pad << "  " << e.dump() << "\n";
      }
    }
  } else {
    os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string RunReport::to_text(bool with_timing) const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  if (!inputs.empty()) render(os, "inputs", inputs, 0);
  if (!outputs.empty()) render(os, "outputs", outputs, 0);
  if (!checks.empty()) {
    os << "checks:\n";
    for (const auto& c : checks) {
      os << "  [" << betti::to_string(c.status) << "] " << c.name;
      if (!c.witness.empty()) os << "  (" << c.witness << ")";
      os << "\n";
    }
    os << "summary: " << checks.size() - failures() << "/" << checks.size()
       << " checks without failure\n";
  }
  if (with_timing) os << "timing_ms: " << timing_ms << "\n";
  return os.str();
}

json to_json(const Rat& r) { return r.to_string(); }

json to_json(const ModInt& m) { return std::to_string(m.value()); }

json to_json(const CycElt& c) {
  json a = json::array();
  for (const auto& x : c.coeffs()) a.push_back(x.to_string());
  return json{{"conductor", std::to_string(c.conductor())}, {"power_basis", a}};
}

json to_json(const CycResidue& c) {
  json a = json::array();
  for (const auto& x : c.coeffs) a.push_back(std::to_string(x.value()));
  return json{{"conductor", std::to_string(c.conductor)}, {"power_basis", a}};
}

json to_json(const RatGroupRing& x) {
  json a = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    a.push_back(json{{"a", std::to_string(x.units()[i])}, {"coeff", x.at(i).to_string()}});
  }
  return a;
}

json to_json(const ModGroupRing& x) {
  json a = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    a.push_back(json{{"a", std::to_string(x.units()[i])},
                     {"residue", std::to_string(x.at(i).value())}});
  }
  return a;
}

json to_json(const QSeries& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    const auto& c = s.coeffs()[i];
    if (c.is_zero()) continue;
    json coeffs = json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(x.to_string());
    rows.push_back(json{
        {"exponent", Rat(Int(static_cast<long>(s.start_units() + static_cast<std::int64_t>(i))),
                         Int(s.ram())).to_string()},
        {"coeff", coeffs}});
  }
  json j{{"ramification", std::to_string(s.ram())},
         {"field_conductor", std::to_string(s.field())}};
  j["lead_exponent"] = s.is_zero() ? json(nullptr) : json(s.lead_exponent().to_string());
  j["truncation"] = s.precision().to_string();
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace betti
