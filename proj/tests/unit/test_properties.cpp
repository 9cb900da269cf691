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

#include "cli/commands.hpp"
#include "testing.hpp"
#include "envelope/envelope.hpp"
#include "frt/cqt.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace qfrt;
using namespace qfrt::testing;

namespace {

void report(const SuiteResult& r) {
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.cases > 0);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("rewriting idempotence and compatibility") { report(rewritingSuite(200, 1)); }

TEST_CASE("bi-ideal closure on every fixture relation") { report(biIdealSuite()); }

TEST_CASE("rewriting agrees with the span oracle") { report(oracleSuite(60, 5, 2)); }

TEST_CASE("converged fixture systems are confluent") {
  for (const auto& f : fixtureSystems()) {
    if (!f.system.converged()) continue;
    CAPTURE(f.name);
    CHECK(isConfluent(f.system));
  }
}

TEST_CASE("localized normal forms are fractions") {
  Rng rng(3);
  for (const auto& f : fixtureSystems()) {
    if (!f.presentation.withDInverse) continue;
    CAPTURE(f.name);
    const Alphabet A = f.system.alphabet();
    for (int k = 0; k < 100; ++k)
      for (const auto& [w, c] : f.system.normalForm(rng.poly(A, 4, 3))) CHECK(isFractionNormal(w));
  }
}

TEST_CASE("larger degree bounds never turn a pass into a fail") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"dvl", R"({"kind":"bilinear_form","dim":2,"matrix":[["1","2"],["0","1"]]})"},
      {"dvl", R"({"kind":"bilinear_form","dim":2,"matrix":[["0","1"],["-1","0"]]})"},
      {"envelope", R"({"kind":"pipeline","braiding":{"dim":2,"preset":"minus_flip"},)"
                   R"("algebra":{"dim":2,"relations":["x_1 x_1","x_2 x_2","x_1 x_2 + x_2 x_1"]}})"},
      {"universal", R"({"kind":"map_family","dim":2,"maps":[{"name":"bracket","in_power":2,"out_power":1,)"
                    R"("entries":[{"in":[1,2],"out":[1],"coeff":"1"},{"in":[2,1],"out":[1],"coeff":"-1"}]}]})"},
  };
  for (const auto& [sub, doc] : cases) {
    std::vector<Verdict> previous;
    for (int bound : {6, 7, 8}) {
      RunOptions o;
      o.maxDeg = bound;
      const CommandResult r = run(sub, doc, o);
      REQUIRE(r.exitCode != 64);
      std::vector<Verdict> now;
      for (const auto& s : r.stages) now.push_back(s.verdict);
      for (std::size_t k = 0; k < previous.size() && k < now.size(); ++k)
        if (previous[k] == Verdict::Pass) CHECK(now[k] == Verdict::Pass);
      previous = now;
    }
  }
}
