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
#include "ncalg/matrix.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/tensor_square.hpp"
#include "oracles.hpp"

using namespace qfrt;
using namespace qfrt::testing;

TEST_CASE("scalars parse exactly") {
  CHECK(parseScalar("3/6") == Scalar(1, 2));
  CHECK(parseScalar("-2") == Scalar(-2));
  CHECK(toString(parseScalar("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parseScalar("1/0"), InputError);
  CHECK_THROWS_AS(parseScalar("1.5"), InputError);
  CHECK_THROWS_AS(parseScalar("2x"), InputError);
  CHECK_THROWS_AS(parseScalar(""), InputError);
}

TEST_CASE("generator order puts Dinv before t before x") {
  const Word d = Word::of(Generator::dInverse());
  const Word t = Word::of(Generator::t(1, 1));
  const Word x = Word::of(Generator::x(1));
  DegLexLess less;
  CHECK(less(d, t));
  CHECK(less(t, x));
  CHECK(less(x, d * d));
  CHECK(less(Word::of(Generator::t(1, 2)), Word::of(Generator::t(2, 1))));
  CHECK(Generator::t(2, 1).name() == "t_2^1");
}

TEST_CASE("polynomial arithmetic") {
  const NCPoly a = tGen(1, 1), b = tGen(1, 2);
  const NCPoly p = a * b - b * a;
  CHECK(p.size() == 2);
  CHECK(p.degree() == 2);
  CHECK(p.isHomogeneous());
  CHECK(p.leadingWord() == Word{Generator::t(1, 2), Generator::t(1, 1)});
  CHECK((p - p).isZero());
  CHECK((3 * p).monic() == (-1) * p);
  CHECK(p.reversed() == -p);
  CHECK((a + 1).constantTerm() == 1);
  CHECK_FALSE((a * a + 1).isHomogeneous());
}

TEST_CASE("default degree bound is twice the relation degree plus two") {
  CHECK(defaultDegreeBound({tGen(1, 1) * tGen(1, 2)}) == 6);
  CHECK(defaultDegreeBound({tGen(1, 1) * tGen(1, 2) * tGen(2, 2), tGen(1, 1)}) == 8);
}

TEST_CASE("completion of the dual-number universal bialgebra") {
  const Presentation P = universalBialgebra(dualNumbersFamily());
  const RewriteSystem rs = P.complete();
  CHECK(rs.converged());
  CHECK(rs.rules().size() == 4);
  CHECK(isConfluent(rs));
  const NCPoly a = tGen(1, 1), b = tGen(1, 2), c = tGen(2, 1), d = tGen(2, 2);
  CHECK(rs.normalForm(a * d - d).isZero());
  CHECK(idealContains(c * c * d, rs).verdict == Membership::Yes);
  const auto no = idealContains(c * d, rs);
  CHECK(no.verdict == Membership::NoDefinitive);
  CHECK_FALSE(no.normalForm.isZero());
  CHECK(rs.normalForm(rs.normalForm(c * d * c + b)) == rs.normalForm(c * d * c + b));
}

TEST_CASE("truncated completion reports unknown membership") {
  // <b, ad - a, da - a, cd - dc> has an infinite deg-lex Groebner basis.
  const NCPoly a = tGen(1, 1), b = tGen(1, 2), c = tGen(2, 1), d = tGen(2, 2);
  const RewriteSystem rs = complete({b, a * d - a, d * a - a, c * d - d * c}, Alphabet::matrix(2), 6);
  CHECK_FALSE(rs.converged());
  CHECK(idealContains(d * a - a * d, rs).verdict == Membership::Yes);
  CHECK(idealContains(c, rs).verdict == Membership::NoUpToBound);
}

TEST_CASE("ideal equality") {
  const NCPoly a = tGen(1, 1), b = tGen(1, 2), c = tGen(2, 1), d = tGen(2, 2);
  const Alphabet A = Alphabet::matrix(2);
  const auto yes = idealEquals({a - 1, b}, {b + a - 1, 2 * b}, A, 0);
  CHECK(yes.answer == Answer::Yes);
  const auto no = idealEquals({a - 1, b}, {a - 1}, A, 0);
  CHECK(no.answer == Answer::No);
  CHECK(no.witnesses.size() == 1);
  // c^3 against the Lie ideal, whose completion does not converge.
  const auto unknown = idealEquals({b, a * d - a, d * a - a, c * d - d * c},
                                   {b, a * d - a, d * a - a, c * d - d * c, c * c * c}, A, 6);
  CHECK(unknown.answer == Answer::Unknown);
}

TEST_CASE("normal words of the exterior algebra") {
  const GradedAlgebra B = exteriorAlgebra(3);
  const RewriteSystem rs = complete(B.relations, Alphabet::vectors(3), 6);
  CHECK(rs.converged());
  CHECK(rs.normalWords(0).size() == 1);
  CHECK(rs.normalWords(1).size() == 3);
  CHECK(rs.normalWords(2).size() == 3);
  CHECK(rs.normalWords(3).size() == 1);
  CHECK(rs.normalWords(4).empty());
}

TEST_CASE("exact matrices") {
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 1) = 1;
  const auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2));
  CHECK((*inv)(0, 1) == -2);
  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_FALSE(s.inverse());
  CHECK(s.rank() == 1);
}

TEST_CASE("tensor square products and reduction") {
  const NCPoly a = tGen(1, 1), b = tGen(1, 2);
  const TensorSquare x = TensorSquare::pure(a, b) * TensorSquare::pure(b, a);
  CHECK((x - TensorSquare::pure(a * b, b * a)).isZero());
  const RewriteSystem rs = complete({b}, Alphabet::matrix(2), 4);
  CHECK(x.reduced(rs, rs).isZero());
  CHECK_FALSE(TensorSquare::pure(a, a).reduced(rs, rs).isZero());
}

TEST_CASE("span oracle agrees with rewriting on homogeneous ideals") {
  const auto rels = commutators(2);
  const SpanOracle oracle(rels, Alphabet::matrix(2), 3);
  const RewriteSystem rs = complete(rels, Alphabet::matrix(2), 6);
  const NCPoly a = tGen(1, 1), b = tGen(1, 2), c = tGen(2, 1);
  CHECK(oracle.contains(a * b * c - c * b * a));
  CHECK(rs.normalForm(a * b * c - c * b * a).isZero());
  CHECK_FALSE(oracle.contains(a * b * c + c * b * a));
  // dim of the degree-3 part of the ideal: 64 words minus 20 monomials.
  CHECK(oracle.rank() == (16 - 10) + (64 - 20));
}
