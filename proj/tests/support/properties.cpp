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

#include "properties.hpp"

#include "dvl/dvl.hpp"
#include "envelope/envelope.hpp"
#include "frt/cqt.hpp"
#include "oracles.hpp"

namespace qfrt::testing {

namespace {

FixtureSystem make(std::string name, Presentation P) {
  RewriteSystem rs = P.complete();
  return {std::move(name), std::move(P), std::move(rs)};
}

Presentation xPresentation(const GradedAlgebra& B) {
  // The x-alphabet has no Presentation type of its own; dim 0 marks it.
  Presentation P;
  P.relations = B.relations;
  return P;
}

RewriteSystem completeAny(const Presentation& P, const Alphabet& A) {
  return complete(P.relations, A, defaultDegreeBound(P.relations));
}

Alphabet alphabetOf(const FixtureSystem& f) { return f.system.alphabet(); }

Matrix mat2(int a, int b, int c, int d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

std::vector<FixtureSystem> fixtureSystems() {
  std::vector<FixtureSystem> out;
  out.push_back(make("dg", universalBialgebra(dualNumbersFamily())));
  out.push_back(make("lie", universalBialgebra({lieBracket()})));
  const PathAlgebra kq = pathAlgebra(Quiver{2, {{1, 2}}});
  out.push_back(make("quiver_a2", gradedUniversal({kq.multiplication}, kq.lengths).presentation));
  for (const auto& f : braidingFixtures()) {
    Presentation P = frtPresentation(f.braiding);
    RewriteSystem rs = P.complete();
    if (f.braiding.dim() <= 2) {
      const WGFData w = buildWGF(f.algebra, f.braiding, rs);
      const LocalizedPresentation L = localize(P, rs, w, CqtForm(f.braiding));
      out.push_back({"localized_" + f.name, L.presentation, L.system});
    }
    out.push_back({"frt_" + f.name, std::move(P), std::move(rs)});
    const Presentation X = xPresentation(f.algebra);
    out.push_back({"algebra_" + f.name, X, completeAny(X, Alphabet::vectors(f.algebra.dim))});
  }
  for (const auto& [name, m] : {std::pair<std::string, Matrix>{"dvl_identity", mat2(1, 0, 0, 1)},
                                {"dvl_symplectic", mat2(0, 1, -1, 0)},
                                {"dvl_unipotent", mat2(1, 2, 0, 1)}})
    out.push_back(make(name, dvlPresentation(BilinearForm(m))));
  out.push_back(make("hev_1", hEvPresentation(1, Matrix::identity(1)).presentation));
  out.push_back(make("hev_2", hEvPresentation(2, Matrix::identity(2)).presentation));
  return out;
}

SuiteResult rewritingSuite(int perSystem, std::uint64_t seed) {
  SuiteResult result;
  Rng rng(seed);
  for (const auto& f : fixtureSystems()) {
    if (!f.system.converged()) continue;
    const Alphabet A = alphabetOf(f);
    const RewriteSystem& rs = f.system;
    for (int k = 0; k < perSystem; ++k) {
      const NCPoly p = rng.poly(A, 3, 4), q = rng.poly(A, 3, 4);
      const NCPoly np = rs.normalForm(p), nq = rs.normalForm(q);
      ++result.cases;
      std::string why;
      if (!(rs.normalForm(np) == np)) why = "idempotence";
      else if (!(rs.normalForm(p + q) == rs.normalForm(np + nq))) why = "sum";
      else if (!(rs.normalForm(p * q) == rs.normalForm(np * nq))) why = "product";
      else
        for (const auto& [w, c] : np)
          if (!rs.isNormal(w)) why = "normal form has a reducible word";
      if (!why.empty()) result.failures.push_back(f.name + ": " + why + " on " + p.str());
    }
  }
  return result;
}

SuiteResult biIdealSuite() {
  SuiteResult result;
  for (const auto& f : fixtureSystems()) {
    if (f.presentation.dim == 0) continue;  // algebras in x are not bialgebras
    const CheckReport r = checkBiIdeal(f.presentation, f.system);
    result.cases += r.checks.size();
    for (const auto& c : r.checks)
      if (c.verdict != Verdict::Pass) result.failures.push_back(f.name + ": " + c.label + " " + toString(c.verdict));
  }
  return result;
}

SuiteResult oracleSuite(int perSystem, int maxDeg, std::uint64_t seed) {
  SuiteResult result;
  Rng rng(seed);
  for (const auto& f : fixtureSystems()) {
    const Alphabet A = alphabetOf(f);
    if (A.generators().size() > 4) continue;  // keeps the dense span small
    std::vector<NCPoly> gens;
    for (const auto& r : f.presentation.relations)
      if (r.degree() <= maxDeg && !r.isZero()) gens.push_back(r);
    if (gens.empty()) continue;  // e.g. the free bialgebra for n = 1
    bool homogeneous = true;
    for (const auto& g : gens) homogeneous = homogeneous && g.isHomogeneous();
    const SpanOracle oracle(gens, A, maxDeg);
    for (int k = 0; k < perSystem; ++k) {
      NCPoly p;
      const int terms = rng.uniform(1, 3);
      for (int m = 0; m < terms; ++m) {
        const NCPoly& g = gens[rng.uniform(0, static_cast<int>(gens.size()) - 1)];
        const int room = maxDeg - g.degree();
        const int lu = rng.uniform(0, room);
        const int lv = rng.uniform(0, room - lu);
        p += g.sandwich(rng.word(A, lu), rng.word(A, lv)) * rng.scalar();
      }
      ++result.cases;
      // A truncated completion of an inhomogeneous ideal may fail to certify
      // membership, but it must never refute it.
      const Membership m = idealContains(p, f.system).verdict;
      if (f.system.converged() ? m != Membership::Yes : m == Membership::NoDefinitive)
        result.failures.push_back(f.name + ": rewriting misses combination " + p.str());
      if (!oracle.contains(p)) result.failures.push_back(f.name + ": oracle misses combination " + p.str());

      if (!homogeneous || !f.system.converged()) continue;
      const int d = rng.uniform(2, maxDeg);
      NCPoly q;
      for (int m = 0; m < 3; ++m) q.addTerm(rng.word(A, d), rng.scalar());
      ++result.cases;
      const bool byRewriting = idealContains(q, f.system).verdict == Membership::Yes;
      if (byRewriting != oracle.contains(q))
        result.failures.push_back(f.name + ": oracle disagrees on " + q.str());
    }
  }
  return result;
}

}  // namespace qfrt::testing
