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

#include "wgf/wgf.hpp"

#include <stdexcept>

namespace qfrt {

const char* toString(WgfAxiom a) {
  switch (a) {
    case WgfAxiom::WGF1:
      return "WGF1";
    case WgfAxiom::WGF2:
      return "WGF2";
    case WgfAxiom::WGF3:
      return "WGF3";
    case WgfAxiom::WGF4:
      return "WGF4";
  }
  return "?";
}

namespace {

Word xWord(const MultiIndex& I) {
  Word w;
  for (int i : I) w *= Word::of(Generator::x(i));
  return w;
}

MultiIndex indicesOf(const Word& w) {
  MultiIndex I;
  for (const auto& g : w.generators()) I.push_back(g.row);
  return I;
}

void checkStructure(const GradedAlgebra& B) {
  for (const auto& r : B.relations) {
    if (r.isZero()) continue;
    for (const auto& [w, c] : r)
      for (const auto& g : w.generators())
        if (g.kind != GenKind::X || g.row < 1 || g.row > B.dim)
          throw WgfError(WgfAxiom::WGF2, "relation " + r.str() + " uses " + g.name() + " outside x_1..x_" + std::to_string(B.dim));
    if (!r.isHomogeneous()) throw WgfError(WgfAxiom::WGF2, "relation " + r.str() + " is not homogeneous");
    if (r.degree() < 2) throw WgfError(WgfAxiom::WGF2, "relation " + r.str() + " has degree below 2");
  }
}

Matrix pairing(const WGFData& w, bool left) {
  const int n = w.dim;
  Matrix P(n, n);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < n; ++k) {
      const Word x = Word::of(Generator::x(i));
      const Word prod = left ? x * w.coBasis[k] : w.coBasis[k] * x;
      const Scalar v = w.bSystem.reduce(NCPoly(prod)).coefficient(w.volume);
      if (left)
        P(i - 1, k) = v;
      else
        P(k, i - 1) = v;
    }
  return P;
}

}  // namespace

WGFData buildWGF(const GradedAlgebra& B, const Braiding& c, const RewriteSystem& aSystem, int maxDeg) {
  if (B.dim != c.dim())
    throw InputError("algebra dimension " + std::to_string(B.dim) + " differs from braiding dimension " + std::to_string(c.dim()));
  if (B.dim < 1) throw InputError("algebra needs at least one generator");
  const int n = B.dim;
  checkStructure(B);

  WGFData w;
  w.dim = n;
  w.algebra = B;
  const int bound = maxDeg > 0 ? maxDeg : std::max(defaultDegreeBound(B.relations), n + 2);
  // Homogeneous relations: the truncated completion is exact in degrees <= bound.
  w.bSystem = complete(B.relations, Alphabet::vectors(n), bound);

  int top = -1;
  for (int d = 0; d <= bound; ++d) {
    const std::size_t count = w.bSystem.normalWords(d).size();
    if (count == 0) {
      top = d - 1;
      break;
    }
    w.dims.push_back(count);
  }
  if (top < 0) throw WgfError(WgfAxiom::WGF3, "dimension did not vanish by maxDeg " + std::to_string(bound), true);
  if (w.dims[top] != 1)
    throw WgfError(WgfAxiom::WGF3, "dim B^" + std::to_string(top) + " = " + std::to_string(w.dims[top]) + ", expected 1");
  w.top = top;
  w.volume = w.bSystem.normalWords(top).front();

  w.coBasis = w.bSystem.normalWords(top - 1);
  if (static_cast<int>(w.coBasis.size()) != n)
    throw WgfError(WgfAxiom::WGF4, "dim B^" + std::to_string(top - 1) + " = " + std::to_string(w.coBasis.size()) +
                                       ", expected " + std::to_string(n));
  w.leftPairing = pairing(w, true);
  w.rightPairing = pairing(w, false);
  const auto Q = w.leftPairing.inverse();
  if (!Q) throw WgfError(WgfAxiom::WGF4, "left pairing matrix " + w.leftPairing.str() + " is singular");
  if (!w.rightPairing.inverse()) throw WgfError(WgfAxiom::WGF4, "right pairing matrix " + w.rightPairing.str() + " is singular");

  for (const auto& r : B.relations) {
    const TensorSquare residue = coact(r, n).reduced(aSystem, w.bSystem);
    if (!residue.isZero()) {
      if (aSystem.converged())
        throw WgfError(WgfAxiom::WGF1, "relation " + r.str() + " does not span a subcomodule: " + residue.str());
      throw WgfError(WgfAxiom::WGF1, "subcomodule test for " + r.str() + " inconclusive at the degree bound", true);
    }
  }

  // rho(volume) = D (x) volume.
  const MultiIndex volIdx = indicesOf(w.volume);
  NCPoly D;
  for (const auto& J : allMultiIndices(n, top)) {
    const NCPoly nf = w.bSystem.reduce(NCPoly(xWord(J)));
    const Scalar lambda = nf.coefficient(w.volume);
    if (nf != NCPoly(w.volume, lambda)) throw std::logic_error("top degree is not one-dimensional");
    if (!isZero(lambda)) D.addTerm(matrixWord(volIdx, J), lambda);
  }
  w.determinant = aSystem.reduce(D);

  for (int j = 0; j < n; ++j) {
    NCPoly om;
    for (int k = 0; k < n; ++k) om.addTerm(w.coBasis[k], (*Q)(k, j));
    w.omega.push_back(std::move(om));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) {
      const NCPoly prod = w.bSystem.reduce(NCPoly::of(Generator::x(i)) * w.omega[j]);
      if (prod != NCPoly(w.volume, (i - 1 == j) ? 1 : 0)) throw std::logic_error("omega basis is not dual to x");
    }

  // Coaction matrix rho(w_k) = sum_m A_km (x) w_m on B^{top-1}.
  std::vector<std::vector<NCPoly>> A(n, std::vector<NCPoly>(n));
  for (int k = 0; k < n; ++k) {
    const MultiIndex Ik = indicesOf(w.coBasis[k]);
    for (const auto& J : allMultiIndices(n, top - 1)) {
      const NCPoly nf = w.bSystem.reduce(NCPoly(xWord(J)));
      for (int m = 0; m < n; ++m) {
        const Scalar v = nf.coefficient(w.coBasis[m]);
        if (!isZero(v)) A[k][m].addTerm(matrixWord(Ik, J), v);
      }
    }
  }
  // omega^a = sum_k Q_ka w_k and w_m = sum_b P_bm omega^b.
  w.T.assign(n, std::vector<NCPoly>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      NCPoly t;
      for (int k = 0; k < n; ++k) {
        if (isZero((*Q)(k, a))) continue;
        for (int m = 0; m < n; ++m) {
          const Scalar s = (*Q)(k, a) * w.leftPairing(b, m);
          if (!isZero(s)) t += A[k][m] * NCPoly(s);
        }
      }
      w.T[a][b] = aSystem.reduce(t);
    }
  return w;
}

QuantumDeterminant quantumDeterminant(const WGFData& w, const RewriteSystem& aSystem) {
  return {w.determinant, grouplikeVerdict(w.determinant, aSystem, w.dim)};
}

const std::vector<NCPoly>& omegaBasis(const WGFData& w) { return w.omega; }
const std::vector<std::vector<NCPoly>>& minorsT(const WGFData& w) { return w.T; }

CheckReport comatrixCheck(const WGFData& w, const RewriteSystem& aSystem) {
  const int n = w.dim;
  CheckReport report;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::string label = "T^" + std::to_string(a + 1) + "_" + std::to_string(b + 1);
      const Scalar e = counit(w.T[a][b]);
      report.add({"counit " + label, e == Scalar(a == b ? 1 : 0) ? Verdict::Pass : Verdict::Fail,
                  e == Scalar(a == b ? 1 : 0) ? "" : "eps = " + toString(e)});
      TensorSquare d = comultiply(w.T[a][b], n);
      for (int k = 0; k < n; ++k) d -= TensorSquare::pure(w.T[a][k], w.T[k][b]);
      d = d.reduced(aSystem, aSystem);
      report.add({"coproduct " + label, vanishes(d.isZero(), aSystem.converged()), d.isZero() ? "" : d.str()});
    }
  for (int a = 0; a < n; ++a) {
    TensorSquare diff = coact(w.omega[a], n);
    for (int b = 0; b < n; ++b) diff -= TensorSquare::pure(w.T[a][b], w.omega[b]);
    diff = diff.reduced(aSystem, w.bSystem);
    report.add({"coaction omega^" + std::to_string(a + 1), vanishes(diff.isZero(), aSystem.converged()),
                diff.isZero() ? "" : diff.str()});
  }
  return report;
}

CheckReport lagrangeCheck(const WGFData& w, const RewriteSystem& aSystem) {
  const int n = w.dim;
  CheckReport report;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly e;
      for (int k = 1; k <= n; ++k) e += NCPoly::of(Generator::t(i, k)) * w.T[j - 1][k - 1];
      if (i == j) e -= w.determinant;
      const auto m = idealContains(e, aSystem);
      report.add({"lagrange " + std::to_string(i) + "," + std::to_string(j), toVerdict(m.verdict),
                  m.verdict == Membership::Yes ? "" : m.normalForm.str()});
    }
  return report;
}

CheckReport jFormCheck(const WGFData& w, const RewriteSystem& aSystem, const CqtForm& form) {
  const int n = w.dim;
  CheckReport report;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly e;
      for (int k = 1; k <= n; ++k)
        e += hayashiAuto(w.determinant, w.T[k - 1][i - 1], form) * NCPoly::of(Generator::t(k, j));
      if (i == j) e -= w.determinant;
      const auto m = idealContains(e, aSystem);
      report.add({"jform " + std::to_string(i) + "," + std::to_string(j), toVerdict(m.verdict),
                  m.verdict == Membership::Yes ? "" : m.normalForm.str()});
    }
  return report;
}

}  // namespace qfrt
