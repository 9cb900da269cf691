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

#include "envelope/envelope.hpp"

namespace qfrt {

namespace {

NCPoly t(int i, int j) { return NCPoly::of(Generator::t(i, j)); }
NCPoly dInv() { return NCPoly::of(Generator::dInverse()); }

void addMembership(CheckReport& report, std::string label, const NCPoly& e, const RewriteSystem& rs) {
  const auto m = idealContains(e, rs);
  report.add({std::move(label), toVerdict(m.verdict), m.verdict == Membership::Yes ? "" : m.normalForm.str()});
}

std::string pairLabel(const char* what, int i, int j) {
  return std::string(what) + " " + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

LocalizedPresentation localize(const Presentation& P, const RewriteSystem& aSystem, const WGFData& w,
                               const CqtForm& form, int maxDeg) {
  const CheckReport normal = checkNormality(w.determinant, aSystem, form);
  if (normal.verdict != Verdict::Pass) {
    std::string why;
    for (const auto& c : normal.checks)
      if (c.verdict != Verdict::Pass) {
        why = c.label + (c.detail.empty() ? "" : ": " + c.detail);
        break;
      }
    if (normal.verdict == Verdict::Fail) throw MathError("D is not normal; refusing to localize (" + why + ")");
    throw Undecided("normality of D inconclusive at the degree bound (" + why + ")");
  }

  LocalizedPresentation L;
  L.dim = P.dim;
  L.D = w.determinant;
  L.presentation.dim = P.dim;
  L.presentation.withDInverse = true;
  L.presentation.relations = P.relations;
  L.presentation.relations.push_back(L.D * dInv() - NCPoly(1));
  L.presentation.relations.push_back(dInv() * L.D - NCPoly(1));
  for (int i = 1; i <= P.dim; ++i)
    for (int j = 1; j <= P.dim; ++j) {
      NCPoly rule = t(i, j) * dInv() - dInv() * aSystem.reduce(hayashiAuto(L.D, t(i, j), form));
      L.normalityRules.push_back(rule);
      L.presentation.relations.push_back(std::move(rule));
    }
  int bound = L.presentation.defaultDegreeBound();
  if (maxDeg > 0) bound = std::max(maxDeg, L.D.degree() + 1);
  L.system = L.presentation.complete(bound);
  return L;
}

NCPoly AntipodeCandidate::image(const Generator& g) const {
  switch (g.kind) {
    case GenKind::DInverse:
      return dInverse;
    case GenKind::T:
      if (g.row >= 1 && g.row <= dim && g.col >= 1 && g.col <= dim) return t[(g.row - 1) * dim + g.col - 1];
      break;
    case GenKind::X:
      break;
  }
  throw InputError("antipode undefined on " + g.name());
}

NCPoly AntipodeCandidate::apply(const NCPoly& p) const {
  return antiSubstitute(p, [this](const Generator& g) { return image(g); });
}

AntipodeCandidate antipodeCandidate(const WGFData& w) {
  AntipodeCandidate S;
  S.dim = w.dim;
  for (int i = 1; i <= w.dim; ++i)
    for (int j = 1; j <= w.dim; ++j) S.t.push_back(w.T[j - 1][i - 1] * dInv());
  S.dInverse = w.determinant;
  return S;
}

CheckReport counitCompatibility(const AntipodeCandidate& S) {
  CheckReport report;
  auto check = [&](const Generator& g) {
    const Scalar got = counit(S.image(g)), want = counit(Word::of(g));
    report.add({"counit S(" + g.name() + ")", got == want ? Verdict::Pass : Verdict::Fail,
                got == want ? "" : "eps = " + toString(got) + ", expected " + toString(want)});
  };
  for (int i = 1; i <= S.dim; ++i)
    for (int j = 1; j <= S.dim; ++j) check(Generator::t(i, j));
  check(Generator::dInverse());
  return report;
}

AntipodeReport antipodeVerify(const LocalizedPresentation& L, const AntipodeCandidate& S) {
  const int n = L.dim;
  const RewriteSystem& rs = L.system;
  AntipodeReport out;
  for (const auto& r : L.presentation.relations) addMembership(out.antiAlgebra, "S(" + r.str() + ")", S.apply(r), rs);

  const NCPoly sD = S.apply(L.D);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly right(i == j ? -1 : 0), left(i == j ? -1 : 0);
      for (int k = 1; k <= n; ++k) {
        right += t(i, k) * S.image(Generator::t(k, j));
        left += S.image(Generator::t(i, k)) * t(k, j);
      }
      addMembership(out.right, pairLabel("t", i, j), right, rs);
      addMembership(out.left, pairLabel("t", i, j), left, rs);
    }
  addMembership(out.right, "D", L.D * sD - NCPoly(1), rs);
  addMembership(out.right, "Dinv", dInv() * S.dInverse - NCPoly(1), rs);
  addMembership(out.left, "D", sD * L.D - NCPoly(1), rs);
  addMembership(out.left, "Dinv", S.dInverse * dInv() - NCPoly(1), rs);
  return out;
}

bool isFractionNormal(const Word& w) {
  bool seenT = false;
  for (const auto& g : w.generators()) {
    if (g.kind == GenKind::DInverse) {
      if (seenT) return false;
    } else if (g.kind == GenKind::T) {
      seenT = true;
    } else {
      return false;
    }
  }
  return true;
}

CheckReport hEvForwardMapCheck(const WGFData& w, const LocalizedPresentation& L) {
  const int n = w.dim;
  Matrix lower(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lower(i, j) = w.bSystem.reduce(w.omega[i] * NCPoly::of(Generator::x(j + 1))).coefficient(w.volume);
  const HEv h = hEvFromBlocks(n, Matrix::identity(n), lower);
  auto image = [&](const Generator& g) -> NCPoly {
    const bool rowV = g.row <= n, colV = g.col <= n;
    if (rowV && colV) return t(g.row, g.col);
    if (!rowV && !colV) return w.T[g.row - n - 1][g.col - n - 1] * dInv();
    return NCPoly();
  };
  CheckReport report;
  for (const auto& r : h.presentation.relations) addMembership(report, "image of " + r.str(), substitute(r, image), L.system);
  return report;
}

EnvelopeResult envelopeReport(const MapTensor& c, const GradedAlgebra& B, const EnvelopeOptions& options) {
  EnvelopeResult out;
  auto push = [&](Stage s) {
    out.stages.push_back(std::move(s));
    out.verdict = overall(out.stages);
    const Stage& last = out.stages.back();
    return last.informational || last.verdict == Verdict::Pass;
  };
  auto failed = [](std::string name, Verdict v, std::string error) {
    Stage s;
    s.name = std::move(name);
    s.verdict = v;
    s.error = std::move(error);
    return s;
  };

  if (!checkBraid(c)) {
    push(failed("braid", Verdict::Fail, "map does not satisfy the braid equation"));
    return out;
  }
  const Braiding braiding(c);
  push(Stage("braid", CheckReport{}));

  const Presentation P = frtPresentation(braiding);
  const RewriteSystem aSystem = P.complete(options.maxDeg);
  Stage frtStage("frt", checkBiIdeal(P, aSystem));
  frtStage.fact("relations", std::to_string(P.relations.size()));
  frtStage.fact("rules", std::to_string(aSystem.rules().size()));
  frtStage.fact("converged", aSystem.converged() ? "true" : "false");
  frtStage.fact("degree_bound", std::to_string(aSystem.degreeBound()));
  out.frt = P;
  if (!push(std::move(frtStage))) return out;

  std::optional<CqtForm> form;
  try {
    form.emplace(braiding);
  } catch (const MathError& e) {
    push(failed("cqt", Verdict::Fail, e.what()));
    return out;
  }
  {
    CheckReport r;
    const bool ok = convolutionInverseHolds(*form);
    r.add({"convolution inverse on generators", ok ? Verdict::Pass : Verdict::Fail, ""});
    if (!push(Stage("cqt", r))) return out;
  }

  std::optional<WGFData> w;
  try {
    w.emplace(buildWGF(B, braiding, aSystem, options.maxDeg));
  } catch (const WgfError& e) {
    Stage s = failed("wgf", e.undecided() ? Verdict::Unknown : Verdict::Fail, e.what());
    s.fact("axiom", toString(e.axiom()));
    push(std::move(s));
    return out;
  }
  {
    Stage s("wgf", CheckReport{});
    std::string dims;
    for (auto d : w->dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    s.fact("top", std::to_string(w->top));
    s.fact("dims", dims);
    s.fact("volume", w->volume.str());
    for (int j = 0; j < w->dim; ++j) s.fact("omega^" + std::to_string(j + 1), w->omega[j].str());
    push(std::move(s));
  }

  {
    const auto qd = quantumDeterminant(*w, aSystem);
    CheckReport r;
    r.add({"counit D = 1", counit(qd.D) == 1 ? Verdict::Pass : Verdict::Fail, ""});
    r.add({"grouplike D", qd.grouplike, ""});
    Stage s("determinant", r);
    s.fact("D", qd.D.str());
    if (!push(std::move(s))) return out;
  }
  {
    Stage s("minors", comatrixCheck(*w, aSystem));
    for (int a = 0; a < w->dim; ++a)
      for (int b = 0; b < w->dim; ++b) s.fact("T^" + std::to_string(a + 1) + "_" + std::to_string(b + 1), w->T[a][b].str());
    if (!push(std::move(s))) return out;
  }
  if (!push(Stage("lagrange", lagrangeCheck(*w, aSystem)))) return out;
  if (options.throughLagrange) {
    push(Stage("jform", jFormCheck(*w, aSystem, *form), true));
    return out;
  }
  if (!push(Stage("normality", checkNormality(w->determinant, aSystem, *form)))) return out;

  std::optional<LocalizedPresentation> L;
  try {
    L.emplace(localize(P, aSystem, *w, *form, options.maxDeg));
  } catch (const MathError& e) {
    push(failed("localize", Verdict::Fail, e.what()));
    return out;
  } catch (const Undecided& e) {
    push(failed("localize", Verdict::Unknown, e.what()));
    return out;
  }
  {
    Stage s("localize", CheckReport{});
    s.fact("rules", std::to_string(L->system.rules().size()));
    s.fact("converged", L->system.converged() ? "true" : "false");
    s.fact("degree_bound", std::to_string(L->system.degreeBound()));
    out.localized = L->presentation;
    push(std::move(s));
  }

  const AntipodeCandidate S = options.antipodeOverride ? *options.antipodeOverride : antipodeCandidate(*w);
  if (S.dim != w->dim) throw InputError("antipode override has dimension " + std::to_string(S.dim));
  {
    Stage s("antipode-candidate", counitCompatibility(S));
    for (int i = 1; i <= S.dim; ++i)
      for (int j = 1; j <= S.dim; ++j) s.fact("S(" + Generator::t(i, j).name() + ")", S.image(Generator::t(i, j)).str());
    s.fact("S(Dinv)", S.dInverse.str());
    if (!push(std::move(s))) return out;
  }
  const AntipodeReport ar = antipodeVerify(*L, S);
  bool ok = push(Stage("antipode-anti-algebra", ar.antiAlgebra));
  ok = push(Stage("antipode-right", ar.right)) && ok;
  ok = push(Stage("antipode-left", ar.left)) && ok;
  if (!ok) return out;

  push(Stage("jform", jFormCheck(*w, aSystem, *form), true));
  return out;
}

}  // namespace qfrt
