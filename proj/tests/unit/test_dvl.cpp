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
#include "dvl/dvl.hpp"
#include "oracles.hpp"

using namespace qfrt;
using namespace qfrt::testing;

namespace {

Matrix mat2(int a, int b, int c, int d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("degenerate forms are rejected") {
  CHECK_THROWS_AS(BilinearForm(mat2(1, 2, 2, 4)), MathError);
  CHECK_THROWS_AS(hEvPresentation(2, mat2(1, 1, 1, 1)), MathError);
}

TEST_CASE("form accessors are one-based") {
  const BilinearForm B(mat2(1, 2, 0, 1));
  CHECK(B.lower(1, 2) == 2);
  CHECK(B.upper(1, 2) == -2);
  CHECK(B.asMap().at({1, 2}, {}) == 2);
}

TEST_CASE("DVL presentation is a bi-ideal and agrees with the universal construction") {
  for (const Matrix& m : {mat2(1, 0, 0, 1), mat2(0, 1, -1, 0), mat2(1, 2, 0, 1)}) {
    const BilinearForm B(m);
    const Presentation P = dvlPresentation(B);
    CHECK(P.relations.size() == 4);
    const RewriteSystem rs = P.complete();
    CHECK(checkBiIdeal(P, rs).passed());
    const Presentation U = universalBialgebra({B.asMap()});
    CHECK(idealEquals(P.relations, rs, U.relations, U.complete()).answer == Answer::Yes);
  }
}

TEST_CASE("one-dimensional form is Hopf") {
  Matrix one(1, 1);
  one(0, 0) = 3;
  const BilinearForm B(one);
  CHECK(dvlRedundancyCheck(B).passed());
  CHECK(dvlAntipodeCheck(B).passed());
  CHECK(dvlAntipode(B, 1, 1) == tGen(1, 1));
}

TEST_CASE("antipode formula matches b^{jk} t_k^l b_{li} on (anti)symmetric forms") {
  for (const Matrix& m : {mat2(1, 0, 0, 1), mat2(0, 1, -1, 0), mat2(2, 1, 1, 3)}) {
    const BilinearForm B(m);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        NCPoly conjugated;
        for (int k = 1; k <= 2; ++k)
          for (int l = 1; l <= 2; ++l) conjugated += B.upper(j, k) * B.lower(l, i) * tGen(k, l);
        CHECK(dvlAntipode(B, i, j) == conjugated);
      }
  }
}

TEST_CASE("second relation family is not redundant for the identity form") {
  // The defining relation says t t^T = 1; the second family t^T t = 1 does not follow
  // in the free algebra. The completion converges, so this is a refutation.
  const BilinearForm B(mat2(1, 0, 0, 1));
  const RewriteSystem rs = dvlPresentation(B).complete();
  CHECK(rs.converged());
  CHECK(isConfluent(rs));
  const NCPoly second = tGen(1, 1) * tGen(1, 1) + tGen(2, 1) * tGen(2, 1) - 1;
  CHECK_FALSE(rs.normalForm(second).isZero());
  CHECK(dvlRedundancyCheck(B, rs).verdict == Verdict::Fail);
}

TEST_CASE("right antipode axiom holds for every form") {
  for (const Matrix& m : {mat2(1, 0, 0, 1), mat2(0, 1, -1, 0), mat2(1, 2, 0, 1)}) {
    const BilinearForm B(m);
    const CheckReport r = dvlAntipodeCheck(B);
    bool sawRight = false;
    for (const auto& c : r.checks)
      if (c.label.find("right") != std::string::npos) {
        sawRight = true;
        CHECK(c.verdict == Verdict::Pass);
      }
    CHECK(sawRight);
  }
}

TEST_CASE("H(ev) for n = 1") {
  const HEv h = hEvPresentation(1, Matrix::identity(1));
  CHECK(h.presentation.dim == 2);
  const RewriteSystem rs = h.presentation.complete();
  CHECK(checkBiIdeal(h.presentation, rs).passed());
  CHECK(hEvStabilityCheck(h, rs).passed());
  CHECK(dvlAntipodeCheck(h.form, h.presentation, rs).passed());
}

TEST_CASE("H(ev) for n = 2 is stable under the block form") {
  const HEv h = hEvPresentation(2, Matrix::identity(2));
  const RewriteSystem rs = h.presentation.complete();
  CHECK(hEvStabilityCheck(h, rs).passed());
}
