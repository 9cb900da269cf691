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

// Command-line driver over the C API.

#include <qfrt/qfrt.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal bialgebras, FRT constructions and Hopf envelopes over Q"};
  app.set_version_flag("--version", qfrt_version());
  std::string subcommand, inputPath, expectPath, phiPath;
  int maxDeg = 0;
  bool json = false, timing = false;
  app.add_option("subcommand", subcommand, "check-braid, universal, frt, dvl, hev, wgf or envelope")->required();
  app.add_option("input", inputPath, "input document (JSON)")->required();
  app.add_option("--max-deg", maxDeg, "degree bound for completions")->check(CLI::Range(1, 64));
  app.add_flag("--json", json, "emit the JSON report");
  app.add_option("--expect", expectPath, "expected relations: JSON or canonical presentation text");
  app.add_option("--phi", phiPath, "matrix document for hev");
  app.add_flag("--timing", timing, "include wall-clock time in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  auto read = [](const std::string& path, const char* what) {
    auto text = slurp(path);
    if (!text) std::cerr << "qfrt: cannot read " << what << " " << path << "\n";
    return text;
  };
  const auto input = read(inputPath, "input");
  std::optional<std::string> expect, phi;
  if (!expectPath.empty()) expect = read(expectPath, "--expect file");
  if (!phiPath.empty()) phi = read(phiPath, "--phi file");
  if (!input || (!expectPath.empty() && !expect) || (!phiPath.empty() && !phi)) return 64;

  qfrt_run_options options{maxDeg, expect ? expect->c_str() : nullptr, phi ? phi->c_str() : nullptr};
  qfrt_report* report = nullptr;
  if (qfrt_run(subcommand.c_str(), input->c_str(), &options, &report) != QFRT_OK) {
    std::cerr << "qfrt: " << qfrt_last_error() << "\n";
    return 70;
  }
  char* text = json ? qfrt_report_json(report, timing) : qfrt_report_text(report, timing);
  std::fputs(text, stdout);
  qfrt_string_free(text);
  const int code = qfrt_report_exit_code(report);
  qfrt_report_free(report);
  return code;
}
