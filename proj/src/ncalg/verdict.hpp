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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncalg/rewrite.hpp"

namespace qfrt {

/// Outcome of a verification: Fail is a refutation under a converged
/// system, Unknown means a degree bound was hit.
enum class Verdict { Pass, Fail, Unknown };

inline const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

/// Fail dominates Unknown dominates Pass.
inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Pass;
}

inline Verdict toVerdict(Membership m) {
  switch (m) {
    case Membership::Yes:
      return Verdict::Pass;
    case Membership::NoDefinitive:
      return Verdict::Fail;
    case Membership::NoUpToBound:
      return Verdict::Unknown;
  }
  return Verdict::Unknown;
}

inline Verdict toVerdict(Answer a) {
  return a == Answer::Yes ? Verdict::Pass : a == Answer::No ? Verdict::Fail : Verdict::Unknown;
}

/// Verdict for "this element vanishes": zero passes, a nonzero residue is
/// a refutation only if the reducing system converged.
inline Verdict vanishes(bool residueIsZero, bool converged) {
  return residueIsZero ? Verdict::Pass : converged ? Verdict::Fail : Verdict::Unknown;
}

struct Check {
  std::string label;
  Verdict verdict = Verdict::Pass;
  std::string detail;  // residue or reason, empty on pass
};

struct CheckReport {
  Verdict verdict = Verdict::Pass;
  std::vector<Check> checks;

  void add(Check c) {
    verdict = combine(verdict, c.verdict);
    checks.push_back(std::move(c));
  }
  void merge(const CheckReport& other) {
    for (const auto& c : other.checks) add(c);
  }
  bool passed() const { return verdict == Verdict::Pass; }
};

/// One step of a verification pipeline. Informational stages are reported
/// but do not enter the overall verdict.
struct Stage {
  std::string name;
  Verdict verdict = Verdict::Pass;
  bool informational = false;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  std::string error;

  Stage() = default;
  Stage(std::string n, const CheckReport& r, bool info = false)
      : name(std::move(n)), verdict(r.verdict), informational(info), checks(r.checks) {}
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

inline Verdict overall(const std::vector<Stage>& stages) {
  Verdict v = Verdict::Pass;
  for (const auto& s : stages)
    if (!s.informational) v = combine(v, s.verdict);
  return v;
}

}  // namespace qfrt
