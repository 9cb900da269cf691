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
#include "bialgebra/universal.hpp"
#include "oracles.hpp"

using namespace qfrt;
using namespace qfrt::testing;

TEST_CASE("map tensors compose and tensor") {
  const MapTensor id = MapTensor::identity(2, 1);
  MapTensor f(2, 1, 1, "f");
  f.add({1}, {2}, 3);
  CHECK(f.compose(id).at({1}, {2}) == 3);
  CHECK(id.compose(f).at({1}, {2}) == 3);
  const MapTensor ff = f.tensor(f);
  CHECK(ff.inPower() == 2);
  CHECK(ff.at({1, 1}, {2, 2}) == 9);
  CHECK(ff.at({1, 2}, {2, 2}) == 0);
  CHECK(allMultiIndices(2, 2).size() == 4);
  CHECK(allMultiIndices(3, 0).size() == 1);
}

TEST_CASE("comultiplication and counit of generators") {
  const TensorSquare delta = comultiply(tGen(1, 2), 2);
  CHECK(delta.terms().size() == 2);
  CHECK(counit(tGen(1, 1) * tGen(2, 2)) == 1);
  CHECK(counit(tGen(1, 2)) == 0);
  CHECK(counit(NCPoly(Word::of(Generator::dInverse()))) == 1);
  CHECK(comultiplyTwice(Word{Generator::t(1, 1), Generator::t(2, 2)}, 2).size() == 16);
}

TEST_CASE("dual numbers give the dg presentation") {
  const Presentation P = universalBialgebra(dualNumbersFamily());
  CHECK(P.dim == 2);
  const NCPoly a = tGen(1, 1), b = tGen(1, 2), c = tGen(2, 1), d = tGen(2, 2);
  const auto eq = idealEquals(P.relations, {a - 1, b, c * c, c * d + d * c}, P.alphabet(), 0);
  CHECK(eq.answer == Answer::Yes);
  CHECK(eq.firstConverged);
  CHECK(eq.secondConverged);
  const RewriteSystem rs = P.complete();
  CHECK(checkBiIdeal(P, rs).passed());
}

TEST_CASE("trace is not colinear for the dual numbers") {
  const RewriteSystem rs = universalBialgebra(dualNumbersFamily()).complete();
  MapTensor tr(2, 1, 0, "tr");
  tr.add({1}, {}, 2);
  CHECK(checkColinear(tr, rs) == Answer::No);
  for (const auto& f : dualNumbersFamily()) CHECK(checkColinear(f, rs) == Answer::Yes);
}

TEST_CASE("Lie bracket presentation") {
  const Presentation P = universalBialgebra({lieBracket()});
  const NCPoly a = tGen(1, 1), b = tGen(1, 2), c = tGen(2, 1), d = tGen(2, 2);
  const auto eq = idealEquals(P.relations, {b, a * d - a, d * a - a, c * d - d * c}, P.alphabet(), 0);
  CHECK(eq.answer == Answer::Yes);
}

TEST_CASE("unit map gives inhomogeneous relations") {
  MapTensor u(2, 0, 1, "u");
  u.add({}, {1}, 1);
  const auto rels = colinearityRelations(u);
  REQUIRE(rels.size() == 2);
  CHECK(rels[0].constantTerm() != 0);
}

TEST_CASE("graded universal bialgebra") {
  const GradedUniversal g = gradedUniversal(dualNumbersFamily(), {0, 1});
  CHECK(g.nonGraded.empty());
  const RewriteSystem rs = g.presentation.complete();
  CHECK(rs.normalForm(tGen(1, 1) - 1).isZero());
  CHECK(rs.normalForm(tGen(1, 2)).isZero());
  CHECK(rs.normalForm(tGen(2, 1)).isZero());
  CHECK_FALSE(rs.normalForm(tGen(2, 2)).isZero());
  CHECK(gradingProjectors({0, 1, 1}).size() == 2);
}

TEST_CASE("trivial grading agrees with the ungraded construction") {
  const auto F = dualNumbersFamily();
  const Presentation graded = gradedUniversal(F, {0, 0}).presentation;
  const Presentation plain = universalBialgebra(F);
  CHECK(idealEquals(graded.relations, plain.relations, plain.alphabet(), 0).answer == Answer::Yes);
}

TEST_CASE("maps of different dimensions are rejected") {
  CHECK_THROWS_AS(universalBialgebra({MapTensor(2, 1, 1), MapTensor(3, 1, 1)}), InputError);
  CHECK_THROWS_AS(universalBialgebra({}), InputError);
  CHECK(universalBialgebra({}, 2).relations.empty());
}

TEST_CASE("path algebra of A2") {
  const PathAlgebra kq = pathAlgebra(Quiver{2, {{1, 2}}});
  CHECK(kq.dim == 3);
  CHECK(kq.lengths == std::vector<int>{0, 0, 1});
  // e2 . alpha = alpha = alpha . e1
  CHECK(kq.multiplication.at({2, 3}, {3}) == 1);
  CHECK(kq.multiplication.at({3, 1}, {3}) == 1);
  CHECK(kq.multiplication.at({1, 3}, {3}) == 0);
  CHECK(kq.unit.at({}, {1}) == 1);
  CHECK(kq.unit.at({}, {2}) == 1);
  const GradedUniversal g = gradedUniversal({kq.multiplication}, kq.lengths);
  CHECK(checkBiIdeal(g.presentation, g.presentation.complete()).passed());
}

TEST_CASE("path algebra of a quiver with a cycle is refused") {
  CHECK_THROWS_AS(pathAlgebra(Quiver{1, {{1, 1}}}), InputError);
}

TEST_CASE("universal property: -tau is colinear over the commutative quotient") {
  const Presentation A = universalBialgebra({Braiding::minusFlip(2).map()});
  const RewriteSystem comm = complete(commutators(2), Alphabet::matrix(2), 6);
  for (const auto& r : A.relations) CHECK(comm.normalForm(r).isZero());
}
