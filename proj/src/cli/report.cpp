// Copyright 2026 The qfrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/report.hpp"

#include <cstdio>
#include <sstream>

#include "cli/format.hpp"
#include "json.hpp"

namespace qfrt {

int exitCodeFor(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return kExitPass;
    case Verdict::Fail:
      return kExitFail;
    case Verdict::Unknown:
      return kExitUnknown;
  }
  return kExitInternal;
}

namespace {

using OJson = nlohmann::ordered_json;

const char* overallName(const CommandResult& r) {
  if (r.exitCode == kExitInput) return "input-error";
  if (r.exitCode == kExitInternal) return "internal-error";
  return toString(r.verdict);
}

std::string formatSeconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

std::string renderJson(const CommandResult& r, bool timing) {
  OJson doc;
  doc["command"] = r.command;
  doc["verdict"] = overallName(r);
  doc["exit_code"] = r.exitCode;
  if (!r.error.empty()) doc["error"] = r.error;
  OJson stages = OJson::array();
  for (const auto& s : r.stages) {
    OJson js;
    js["name"] = s.name;
    js["verdict"] = toString(s.verdict);
    if (s.informational) js["informational"] = true;
    if (!s.error.empty()) js["error"] = s.error;
    if (!s.facts.empty()) {
      OJson facts = OJson::object();
      for (const auto& [k, v] : s.facts) facts[k] = v;
      js["facts"] = facts;
    }
    OJson checks = OJson::array();
    for (const auto& c : s.checks) {
      OJson jc;
      jc["label"] = c.label;
      jc["verdict"] = toString(c.verdict);
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    js["checks"] = checks;
    stages.push_back(js);
  }
  doc["stages"] = stages;
  OJson pres = OJson::object();
  for (const auto& [name, P] : r.presentations) {
    OJson jp;
    jp["dim"] = P.dim;
    jp["dinv"] = P.withDInverse;
    OJson rels = OJson::array();
    for (const auto& rel : canonicalRelations(P.relations)) rels.push_back(rel.str());
    jp["relations"] = rels;
    pres[name] = jp;
  }
  doc["presentations"] = pres;
  if (timing) doc["timing"] = {{"seconds", formatSeconds(r.seconds)}};
  return doc.dump(2) + "\n";
}

std::string renderText(const CommandResult& r, bool timing) {
  std::ostringstream out;
  out << "qfrt " << r.command << ": " << overallName(r) << " (exit " << r.exitCode << ")\n";
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  for (const auto& s : r.stages) {
    out << "[" << toString(s.verdict) << "] " << s.name;
    if (s.informational) out << " (informational)";
    out << "\n";
    if (!s.error.empty()) out << "    error: " << s.error << "\n";
    for (const auto& [k, v] : s.facts) out << "    " << k << " = " << v << "\n";
    std::size_t passed = 0;
    for (const auto& c : s.checks) {
      if (c.verdict == Verdict::Pass) {
        ++passed;
        continue;
      }
      out << "    " << toString(c.verdict) << ": " << c.label;
      if (!c.detail.empty()) out << " -> " << c.detail;
      out << "\n";
    }
    if (!s.checks.empty()) out << "    " << passed << "/" << s.checks.size() << " checks passed\n";
  }
  for (const auto& [name, P] : r.presentations) out << "\n" << name << ":\n" << serializePresentation(P);
  if (timing) out << "\ntime " << formatSeconds(r.seconds) << " s\n";
  return out.str();
}

}  // namespace qfrt
