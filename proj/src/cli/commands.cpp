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

#include <chrono>
#include <functional>
#include <map>

#include "bialgebra/universal.hpp"
#include "cli/document.hpp"
#include "cli/format.hpp"
#include "dvl/dvl.hpp"
#include "envelope/envelope.hpp"
#include "frt/cqt.hpp"

namespace qfrt {

namespace {

struct Context {
  Document doc;
  const RunOptions& options;
  int maxDeg = 0;
  CommandResult& result;

  // Records a stage; true when downstream stages should run.
  bool push(Stage s) {
    result.stages.push_back(std::move(s));
    const Stage& last = result.stages.back();
    return last.informational || last.verdict == Verdict::Pass;
  }
  void present(std::string name, const Presentation& P) { result.presentations.emplace_back(std::move(name), P); }
};

Stage errorStage(std::string name, Verdict v, std::string error) {
  Stage s;
  s.name = std::move(name);
  s.verdict = v;
  s.error = std::move(error);
  return s;
}

void systemFacts(Stage& s, const Presentation& P, const RewriteSystem& rs) {
  s.fact("relations", std::to_string(P.relations.size()));
  s.fact("rules", std::to_string(rs.rules().size()));
  s.fact("converged", rs.converged() ? "true" : "false");
  s.fact("degree_bound", std::to_string(rs.degreeBound()));
}

void requireKind(const Document& d, std::initializer_list<const char*> kinds) {
  std::string names;
  for (const char* k : kinds) {
    if (d.kind == k) return;
    names += (names.empty() ? "" : " or ") + std::string(k);
  }
  d.node().at("kind").fail("expected kind " + names + ", got \"" + d.kind + "\"");
}

Stage equalityStage(std::string name, const std::vector<NCPoly>& first, const RewriteSystem& firstSystem,
                    const std::vector<NCPoly>& second, const RewriteSystem& secondSystem) {
  const EqualityResult eq = idealEquals(first, firstSystem, second, secondSystem);
  Stage s;
  s.name = std::move(name);
  s.verdict = toVerdict(eq.answer);
  s.fact("answer", toString(eq.answer));
  s.fact("computed_converged", eq.firstConverged ? "true" : "false");
  s.fact("other_converged", eq.secondConverged ? "true" : "false");
  for (const auto& w : eq.witnesses) s.checks.push_back({"generator not certified", s.verdict, w});
  return s;
}

// Ideal equality against --expect; no-op without one.
void expectStage(Context& ctx, const Presentation& P, const RewriteSystem& rs) {
  if (!ctx.options.expect) return;
  std::vector<NCPoly> expected;
  try {
    expected = readRelationList(*ctx.options.expect);
  } catch (const InputError& e) {
    throw InputError(std::string("--expect: ") + e.what());
  }
  const Alphabet alphabet = P.alphabet();
  for (const auto& r : expected)
    for (const auto& [w, c] : r)
      if (!alphabet.contains(w)) throw InputError("--expect: relation " + r.str() + " uses generators outside the computed presentation");
  const RewriteSystem expectedSystem = complete(expected, alphabet, ctx.maxDeg > 0 ? ctx.maxDeg : defaultDegreeBound(expected));
  ctx.push(equalityStage("expect", P.relations, rs, expected, expectedSystem));
}

void checkBraidCommand(Context& ctx) {
  requireKind(ctx.doc, {"braiding", "pipeline"});
  const Node root = ctx.doc.node();
  const MapTensor c = readBraidingMap(ctx.doc.kind == "pipeline" ? root.at("braiding") : root);
  if (!checkBraid(c)) {
    ctx.push(errorStage("braid", Verdict::Fail, "map does not satisfy the braid equation"));
    return;
  }
  Stage s("braid", CheckReport{});
  s.fact("dim", std::to_string(c.dim()));
  s.fact("invertible", Braiding(c).invertible() ? "true" : "false");
  ctx.push(std::move(s));
}

void universalCommand(Context& ctx) {
  requireKind(ctx.doc, {"map_family", "quiver"});
  const Node root = ctx.doc.node();
  std::vector<MapTensor> maps;
  std::optional<std::vector<int>> degrees;
  int dim = 0;
  if (ctx.doc.kind == "quiver") {
    const PathAlgebra kq = pathAlgebra(readQuiver(root));
    dim = kq.dim;
    maps.push_back(kq.multiplication);
    if (root.has("unit") && root.at("unit").boolean()) maps.push_back(kq.unit);
    if (!root.has("graded") || root.at("graded").boolean()) degrees = kq.lengths;
  } else {
    dim = root.at("dim").integer(1, 64);
    maps = readMaps(root.at("maps"), dim);
    if (root.has("degrees")) {
      const Node d = root.at("degrees");
      if (static_cast<int>(d.size()) != dim) d.fail("expected " + std::to_string(dim) + " degrees");
      degrees.emplace();
      for (int k = 0; k < dim; ++k) degrees->push_back(d.at(k).integer(0, 64));
    }
  }

  Presentation P;
  Stage built("universal", CheckReport{});
  built.fact("dim", std::to_string(dim));
  built.fact("maps", std::to_string(maps.size()));
  if (degrees) {
    GradedUniversal g = gradedUniversal(maps, *degrees);
    P = std::move(g.presentation);
    built.fact("graded", "true");
    std::string names;
    for (const auto& n : g.nonGraded) names += (names.empty() ? "" : ",") + n;
    if (!names.empty()) built.fact("non_graded_maps", names);
  } else {
    P = universalBialgebra(maps, dim);
  }
  ctx.push(std::move(built));
  ctx.present("A(F)", P);

  const RewriteSystem rs = P.complete(ctx.maxDeg);
  Stage bi("bi-ideal", checkBiIdeal(P, rs));
  systemFacts(bi, P, rs);
  ctx.push(std::move(bi));

  if (ctx.doc.kind == "map_family" && root.has("probes")) {
    const Node probes = root.at("probes");
    Stage s;
    s.name = "probes";
    bool anyExpectation = false;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Node pn = probes.at(k);
      const MapTensor f = readMap(pn, dim);
      const Answer a = checkColinear(f, rs);
      const std::string label = "colinear " + (f.name().empty() ? "probe " + std::to_string(k) : f.name());
      Verdict v = toVerdict(a);
      if (pn.has("expect")) {
        anyExpectation = true;
        const Node e = pn.at("expect");
        const std::string want = e.string();
        if (want != "colinear" && want != "not_colinear") e.fail("expected \"colinear\" or \"not_colinear\"");
        if (a != Answer::Unknown && want == "not_colinear") v = a == Answer::No ? Verdict::Pass : Verdict::Fail;
      }
      s.checks.push_back({label, v, toString(a)});
      s.verdict = combine(s.verdict, v);
    }
    s.informational = !anyExpectation;
    ctx.push(std::move(s));
  }
  expectStage(ctx, P, rs);
}

void frtCommand(Context& ctx) {
  requireKind(ctx.doc, {"braiding", "pipeline"});
  const Node root = ctx.doc.node();
  const bool pipeline = ctx.doc.kind == "pipeline";
  const MapTensor c = readBraidingMap(pipeline ? root.at("braiding") : root);
  std::optional<GradedAlgebra> B;
  if (pipeline) {
    B = readAlgebra(root.at("algebra"));
    if (B->dim != c.dim()) root.at("algebra").at("dim").fail("algebra dimension differs from braiding dimension " + std::to_string(c.dim()));
  }
  if (!checkBraid(c)) {
    ctx.push(errorStage("braid", Verdict::Fail, "map does not satisfy the braid equation"));
    return;
  }
  const Braiding braiding(c);
  ctx.push(Stage("braid", CheckReport{}));

  const Presentation P = frtPresentation(braiding);
  const RewriteSystem rs = P.complete(ctx.maxDeg);
  ctx.present("A(c)", P);
  Stage bi("frt", checkBiIdeal(P, rs));
  systemFacts(bi, P, rs);
  if (!ctx.push(std::move(bi))) return;

  const Presentation U = universalBialgebra({c}, c.dim());
  if (!ctx.push(equalityStage("universal-agreement", P.relations, rs, U.relations, U.complete(ctx.maxDeg)))) return;

  std::optional<CqtForm> form;
  try {
    form.emplace(braiding);
  } catch (const MathError& e) {
    ctx.push(errorStage("cqt", Verdict::Fail, e.what()));
    return;
  }
  CheckReport cqt;
  cqt.add({"convolution inverse on generators", convolutionInverseHolds(*form) ? Verdict::Pass : Verdict::Fail, ""});
  cqt.merge(checkCQT3(rs, *form));
  if (!ctx.push(Stage("cqt", cqt))) return;

  if (B) {
    std::optional<WGFData> w;
    try {
      w.emplace(buildWGF(*B, braiding, rs, ctx.maxDeg));
    } catch (const WgfError& e) {
      Stage s = errorStage("wgf", e.undecided() ? Verdict::Unknown : Verdict::Fail, e.what());
      s.fact("axiom", toString(e.axiom()));
      ctx.push(std::move(s));
      return;
    }
    const QuantumDeterminant qd = quantumDeterminant(*w, rs);
    CheckReport det;
    det.add({"grouplike D", qd.grouplike, ""});
    Stage ds("determinant", det);
    ds.fact("D", qd.D.str());
    if (!ctx.push(std::move(ds))) return;
    if (!ctx.push(Stage("normality", checkNormality(qd.D, rs, *form)))) return;
  }
  expectStage(ctx, P, rs);
}

std::optional<BilinearForm> readForm(Context& ctx, const Matrix& m) {
  try {
    return BilinearForm(m);
  } catch (const MathError& e) {
    ctx.push(errorStage("form", Verdict::Fail, e.what()));
    return std::nullopt;
  }
}

void dvlCommand(Context& ctx) {
  requireKind(ctx.doc, {"bilinear_form"});
  const Node root = ctx.doc.node();
  const auto B = readForm(ctx, readMatrix(root.at("matrix"), root.at("dim").integer(1, 64)));
  if (!B) return;
  Stage fs("form", CheckReport{});
  fs.fact("dim", std::to_string(B->dim()));
  ctx.push(std::move(fs));

  const Presentation P = dvlPresentation(*B);
  const RewriteSystem rs = P.complete(ctx.maxDeg);
  ctx.present("A(b)", P);
  Stage bi("dvl", checkBiIdeal(P, rs));
  systemFacts(bi, P, rs);
  if (!ctx.push(std::move(bi))) return;
  const Presentation U = universalBialgebra({B->asMap()}, B->dim());
  ctx.push(equalityStage("universal-agreement", P.relations, rs, U.relations, U.complete(ctx.maxDeg)));
  ctx.push(Stage("redundancy", dvlRedundancyCheck(*B, rs)));
  ctx.push(Stage("antipode", dvlAntipodeCheck(*B, P, rs)));
  expectStage(ctx, P, rs);
}

void hevCommand(Context& ctx) {
  requireKind(ctx.doc, {"bilinear_form"});
  const Node root = ctx.doc.node();
  const int n = root.at("dim").integer(1, 32);
  Matrix phi = Matrix::identity(n);
  if (ctx.options.phi) {
    Json j;
    try {
      j = Json::parse(*ctx.options.phi);
    } catch (const Json::parse_error& e) {
      throw SchemaError("--phi $", std::string("invalid JSON: ") + e.what());
    }
    const Node pn(j, "--phi $");
    phi = readMatrix(j.is_array() ? pn : pn.at("matrix"), n);
  } else if (root.has("matrix")) {
    phi = readMatrix(root.at("matrix"), n);
  }
  std::optional<HEv> h;
  try {
    h.emplace(hEvPresentation(n, phi));
  } catch (const MathError& e) {
    ctx.push(errorStage("form", Verdict::Fail, e.what()));
    return;
  }
  const Presentation& P = h->presentation;
  const RewriteSystem rs = P.complete(ctx.maxDeg);
  ctx.present("H(ev)", P);
  Stage bi("hev", checkBiIdeal(P, rs));
  bi.fact("n", std::to_string(n));
  systemFacts(bi, P, rs);
  if (!ctx.push(std::move(bi))) return;
  ctx.push(Stage("stability", hEvStabilityCheck(*h, rs)));
  ctx.push(Stage("antipode", dvlAntipodeCheck(h->form, P, rs)));
  expectStage(ctx, P, rs);
}

void pipelineCommand(Context& ctx, bool full) {
  requireKind(ctx.doc, {"pipeline"});
  if (ctx.options.expect) throw InputError("--expect is not supported by this subcommand");
  const Node root = ctx.doc.node();
  const MapTensor c = readBraidingMap(root.at("braiding"));
  const GradedAlgebra B = readAlgebra(root.at("algebra"));
  if (B.dim != c.dim()) root.at("algebra").at("dim").fail("algebra dimension differs from braiding dimension " + std::to_string(c.dim()));
  EnvelopeOptions opts;
  opts.maxDeg = ctx.maxDeg;
  opts.throughLagrange = !full;
  if (root.has("antipode")) {
    if (!full) root.at("antipode").fail("antipode candidates are only used by envelope");
    opts.antipodeOverride = readAntipode(root.at("antipode"), c.dim());
  }
  EnvelopeResult r = envelopeReport(c, B, opts);
  for (auto& s : r.stages) ctx.result.stages.push_back(std::move(s));
  if (r.frt) ctx.present("A(c)", *r.frt);
  if (r.localized) ctx.present("A(c)[Dinv]", *r.localized);
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"check-braid", checkBraidCommand},
      {"universal", universalCommand},
      {"frt", frtCommand},
      {"dvl", dvlCommand},
      {"hev", hevCommand},
      {"wgf", [](Context& c) { pipelineCommand(c, false); }},
      {"envelope", [](Context& c) { pipelineCommand(c, true); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"check-braid", "universal", "frt", "dvl", "hev", "wgf", "envelope"};
  return names;
}

CommandResult run(std::string_view subcommand, std::string_view input, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  result.command = std::string(subcommand);
  auto fatal = [&](int code, std::string message) {
    result.exitCode = code;
    result.error = std::move(message);
  };
  try {
    const auto it = handlers().find(subcommand);
    if (it == handlers().end()) throw InputError("unknown subcommand \"" + result.command + "\"");
    Context ctx{parseDocument(input), options, 0, result};
    ctx.maxDeg = options.maxDeg > 0 ? options.maxDeg : ctx.doc.maxDeg.value_or(0);
    it->second(ctx);
    result.verdict = overall(result.stages);
    result.exitCode = exitCodeFor(result.verdict);
  } catch (const InputError& e) {
    fatal(kExitInput, e.what());
  } catch (const MathError& e) {
    result.stages.push_back(errorStage("error", Verdict::Fail, e.what()));
    result.verdict = Verdict::Fail;
    result.exitCode = kExitFail;
  } catch (const Undecided& e) {
    result.stages.push_back(errorStage("error", Verdict::Unknown, e.what()));
    result.verdict = Verdict::Unknown;
    result.exitCode = kExitUnknown;
  } catch (const std::exception& e) {
    fatal(kExitInternal, std::string("internal error: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace qfrt
