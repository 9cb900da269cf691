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

#include "testing.hpp"
#include "frt/cqt.hpp"
#include "oracles.hpp"

using namespace qfrt;
using namespace qfrt::testing;

namespace {

WGFData exterior(int n, const RewriteSystem& rs) { return buildWGF(exteriorAlgebra(n), Braiding::minusFlip(n), rs); }

}  // namespace

TEST_CASE("exterior algebras: determinant and signed minors") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const RewriteSystem rs = frtPresentation(Braiding::minusFlip(n)).complete();
    const WGFData w = exterior(n, rs);
    CHECK(w.top == n);
    CHECK(w.dims.back() == 1);
    CHECK(rs.normalForm(w.determinant - leibnizDeterminant(n)).isZero());
    const auto& T = minorsT(w);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) CHECK(rs.normalForm(T[a - 1][b - 1] - cofactor(n, a, b)).isZero());
    CHECK(quantumDeterminant(w, rs).grouplike == Verdict::Pass);
    CHECK(comatrixCheck(w, rs).passed());
    CHECK(lagrangeCheck(w, rs).passed());
  }
}

TEST_CASE("omega basis is dual to the generators") {
  const RewriteSystem rs = frtPresentation(Braiding::minusFlip(3)).complete();
  const WGFData w = exterior(3, rs);
  const RewriteSystem& B = w.bSystem;
  const NCPoly vol(w.volume);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(B.normalForm(xGen(i) * omegaBasis(w)[j - 1] - (i == j ? vol : NCPoly())).isZero());
}

TEST_CASE("noncommutative diagonal determinant") {
  const auto fx = braidingFixtures().back();
  const RewriteSystem rs = frtPresentation(fx.braiding).complete();
  const WGFData w = buildWGF(fx.algebra, fx.braiding, rs);
  // rho(x1 x2) = sum t_1^a t_2^b (x) x_a x_b, and x2 x1 = 1/2 x1 x2 in B.
  const NCPoly D = tGen(1, 1) * tGen(2, 2) + Scalar(1, 2) * (tGen(1, 2) * tGen(2, 1));
  CHECK(rs.normalForm(w.determinant - D).isZero());
  CHECK(lagrangeCheck(w, rs).passed());
}

TEST_CASE("WGF axioms are checked in order and named") {
  const RewriteSystem rs = frtPresentation(Braiding::minusFlip(2)).complete();
  SUBCASE("WGF4: singular left pairing") {
    GradedAlgebra B;
    B.dim = 2;
    B.relations = {xGen(1) * xGen(2), xGen(2) * xGen(1), xGen(1) * xGen(1), xGen(2) * xGen(2) * xGen(2)};
    try {
      buildWGF(B, Braiding::minusFlip(2), rs);
      FAIL("expected WGF4");
    } catch (const WgfError& e) {
      CHECK(e.axiom() == WgfAxiom::WGF4);
      CHECK(std::string(e.what()).find("[[0, 0], [0, 1]]") != std::string::npos);
    }
  }
  SUBCASE("WGF3: infinite algebra is undecided") {
    GradedAlgebra B;
    B.dim = 2;
    B.relations = {xGen(1) * xGen(2) - xGen(2) * xGen(1)};
    try {
      buildWGF(B, Braiding::minusFlip(2), rs, 6);
      FAIL("expected WGF3");
    } catch (const WgfError& e) {
      CHECK(e.axiom() == WgfAxiom::WGF3);
      CHECK(e.undecided());
    }
  }
  SUBCASE("WGF1: relations not a subcomodule") {
    GradedAlgebra B;
    B.dim = 2;
    B.relations = {xGen(1) * xGen(1), xGen(2) * xGen(2), xGen(1) * xGen(2) - xGen(2) * xGen(1)};
    try {
      buildWGF(B, Braiding::minusFlip(2), rs);
      FAIL("expected WGF1");
    } catch (const WgfError& e) {
      CHECK(e.axiom() == WgfAxiom::WGF1);
      CHECK_FALSE(e.undecided());
    }
  }
}

TEST_CASE("jform holds for -tau") {
  const Braiding c = Braiding::minusFlip(2);
  const RewriteSystem rs = frtPresentation(c).complete();
  const WGFData w = exterior(2, rs);
  CHECK(jFormCheck(w, rs, CqtForm(c)).passed());
}
