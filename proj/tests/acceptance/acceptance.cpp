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

// Prints one PASS/FAIL line per acceptance criterion. With --criterion N
// only that criterion runs; the exit status is nonzero if any run fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "dvl/dvl.hpp"
#include "envelope/envelope.hpp"
#include "frt/cqt.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace qfrt;
using namespace qfrt::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

NCPoly a() { return tGen(1, 1); }
NCPoly b() { return tGen(1, 2); }
NCPoly c() { return tGen(2, 1); }
NCPoly d() { return tGen(2, 2); }

Outcome dgReproduction() {
  Outcome o;
  const Presentation P = universalBialgebra(dualNumbersFamily());
  const auto eq = idealEquals(P.relations, {a() - 1, b(), c() * c(), c() * d() + d() * c()}, P.alphabet(), 0);
  o.require(eq.answer == Answer::Yes, std::string("idealEquals = ") + toString(eq.answer));
  o.require(eq.firstConverged && eq.secondConverged, "completion did not converge");
  return o;
}

Outcome traceNonColinear() {
  Outcome o;
  const RewriteSystem rs = universalBialgebra(dualNumbersFamily()).complete();
  MapTensor tr(2, 1, 0, "tr");
  tr.add({1}, {}, 2);
  o.require(rs.converged(), "A(m,u) completion did not converge");
  o.require(checkColinear(tr, rs) == Answer::No, "trace not refuted");
  return o;
}

Outcome lieFixture() {
  Outcome o;
  const Presentation P = universalBialgebra({lieBracket()});
  const auto eq = idealEquals(P.relations, {b(), a() * d() - a(), d() * a() - a(), c() * d() - d() * c()}, P.alphabet(), 0);
  o.require(eq.answer == Answer::Yes, std::string("idealEquals = ") + toString(eq.answer));
  return o;
}

Outcome classicalRecovery() {
  Outcome o;
  for (int n : {2, 3}) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const Braiding tau = Braiding::minusFlip(n);
    const Presentation P = frtPresentation(tau);
    const RewriteSystem rs = P.complete();
    const auto eq = idealEquals(P.relations, commutators(n), P.alphabet(), 0);
    o.require(eq.answer == Answer::Yes, tag + "FRT ideal is not the commutator ideal");
    const WGFData w = buildWGF(exteriorAlgebra(n), tau, rs);
    o.require(rs.normalForm(w.determinant - leibnizDeterminant(n)).isZero(), tag + "D is not the determinant");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        o.require(rs.normalForm(w.T[i - 1][j - 1] - cofactor(n, i, j)).isZero(), tag + "T is not the signed minor");
    o.require(lagrangeCheck(w, rs).passed(), tag + "Lagrange identity");
    const LocalizedPresentation L = localize(P, rs, w, CqtForm(tau));
    const AntipodeCandidate S = antipodeCandidate(w);
    const NCPoly dinv(Word::of(Generator::dInverse()));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        o.require(L.system.normalForm(S.image(Generator::t(i, j)) - cofactor(n, j, i) * dinv).isZero(),
                  tag + "antipode is not adjugate / det");
    const AntipodeReport ar = antipodeVerify(L, S);
    o.require(ar.verdict() == Verdict::Pass, tag + "antipodeVerify = " + toString(ar.verdict()));
  }
  return o;
}

Outcome mainTheorem() {
  Outcome o;
  const auto fx = braidingFixtures();
  for (int idx : {2, 3, 0}) {  // diag_1, diag_2, minus_tau_2
    const EnvelopeResult r = envelopeReport(fx[idx].braiding.map(), fx[idx].algebra);
    for (const auto& s : r.stages)
      o.require(s.verdict == Verdict::Pass, fx[idx].name + ": stage " + s.name + " " + toString(s.verdict));
    o.require(r.stages.size() == 14, fx[idx].name + ": pipeline halted early");
  }
  return o;
}

Outcome dvlSuite() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<int>>> forms{
      {"I2", {1, 0, 0, 1}}, {"[[0,1],[-1,0]]", {0, 1, -1, 0}}, {"[[1,2],[0,1]]", {1, 2, 0, 1}}};
  for (const auto& [name, e] : forms) {
    Matrix m(2, 2);
    for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = e[k];
    const BilinearForm B(m);
    const Presentation P = dvlPresentation(B);
    const RewriteSystem rs = P.complete();
    const CheckReport red = dvlRedundancyCheck(B, rs);
    o.require(red.passed(), name + ": redundancy " + toString(red.verdict));
    const CheckReport anti = dvlAntipodeCheck(B, P, rs);
    for (const auto& c : anti.checks)
      if (c.verdict != Verdict::Pass) {
        o.require(false, name + ": " + c.label + " " + toString(c.verdict));
        break;
      }
  }
  return o;
}

Outcome cqtProperties() {
  Outcome o;
  for (const auto& f : braidingFixtures()) {
    const CqtForm form(f.braiding);
    const RewriteSystem rs = frtPresentation(f.braiding).complete();
    o.require(convolutionInverseHolds(form), f.name + ": convolution inverse");
    o.require(checkCQT3(rs, form).passed(), f.name + ": CQT3");
    const WGFData w = buildWGF(f.algebra, f.braiding, rs);
    o.require(checkNormality(w.determinant, rs, form).passed(), f.name + ": normality of D");
  }
  return o;
}

Outcome propertySuites() {
  Outcome o;
  for (const auto& [name, r] : {std::pair<std::string, SuiteResult>{"rewriting", rewritingSuite(200, 1)},
                                {"bi-ideal", biIdealSuite()},
                                {"oracle", oracleSuite(60, 5, 2)}}) {
    o.require(r.cases > 0, name + ": no cases");
    for (const auto& f : r.failures) o.require(false, name + ": " + f);
  }
  return o;
}

Outcome negativeControls() {
  Outcome o;
  MapTensor bad = MapTensor::identity(2, 2);
  bad.add({1, 1}, {1, 2}, 1);
  o.require(!checkBraid(bad), "perturbed map accepted as a braiding");
  Matrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  bool rejected = false;
  try {
    BilinearForm{singular};
  } catch (const MathError&) {
    rejected = true;
  }
  o.require(rejected, "singular form accepted");
  GradedAlgebra B;
  B.dim = 2;
  B.relations = {xGen(1) * xGen(2), xGen(2) * xGen(1), xGen(1) * xGen(1), xGen(2) * xGen(2) * xGen(2)};
  const EnvelopeResult r = envelopeReport(Braiding::minusFlip(2).map(), B);
  const Stage& last = r.stages.back();
  bool named = false;
  for (const auto& [k, v] : last.facts) named = named || (k == "axiom" && v == "WGF4");
  o.require(last.name == "wgf" && last.verdict == Verdict::Fail && named, "WGF4 violation not named");
  const CommandResult sab = run("envelope", R"({"kind":"pipeline","braiding":{"diagonal":[["-1"]]},)"
                                            R"("algebra":{"dim":1,"relations":["x_1 x_1"]},)"
                                            R"("antipode":{"t":[["t_1^1"]],"dinv":"t_1^1"}})");
  o.require(sab.exitCode == 1, "sabotaged antipode exit code " + std::to_string(sab.exitCode));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budgetSeconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "dual-number ideal equality", 1, dgReproduction},
      {2, "trace is not colinear", 1, traceNonColinear},
      {3, "Lie-algebra ideal equality", 1, lieFixture},
      {4, "classical recovery for -tau, n = 2, 3", 120, classicalRecovery},
      {5, "Hopf envelope pipeline passes", 120, mainTheorem},
      {6, "DVL redundancy and antipode", 30, dvlSuite},
      {7, "cqt properties", 30, cqtProperties},
      {8, "property suites", 120, propertySuites},
      {9, "negative controls", 10, negativeControls},
  };
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);
  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.budgetSeconds, "over time budget");
    std::printf("criterion %d: %s - %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs);
    for (std::size_t k = 0; k < o.notes.size() && k < 8; ++k) std::printf("    %s\n", o.notes[k].c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
