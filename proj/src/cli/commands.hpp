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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/report.hpp"

namespace qfrt {

struct RunOptions {
  int maxDeg = 0;  // 0: document option or default bound
  std::optional<std::string> expect;  // relation list contents
  std::optional<std::string> phi;     // matrix document contents, hev only
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand on a JSON document. Never throws: input problems
/// give exit code 64 and unexpected failures 70, each with a report.
CommandResult run(std::string_view subcommand, std::string_view input, const RunOptions& options = {});

}  // namespace qfrt
