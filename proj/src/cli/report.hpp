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

#include "bialgebra/presentation.hpp"
#include "ncalg/verdict.hpp"

namespace qfrt {

/// Exit codes of the command-line contract.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUnknown = 2, kExitInput = 64, kExitInternal = 70 };

int exitCodeFor(Verdict v);

struct CommandResult {
  std::string command;
  std::vector<Stage> stages;
  std::vector<std::pair<std::string, Presentation>> presentations;
  Verdict verdict = Verdict::Pass;
  int exitCode = kExitPass;
  std::string error;  // set for input and internal errors
  double seconds = 0;
};

/// Byte-stable JSON; timing is included only when asked for.
std::string renderJson(const CommandResult& r, bool timing = false);
std::string renderText(const CommandResult& r, bool timing = false);

}  // namespace qfrt
