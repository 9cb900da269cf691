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

#include "bialgebra/presentation.hpp"

namespace qfrt {

Word matrixWord(const MultiIndex& I, const MultiIndex& J) {
  std::u32string s;
  s.reserve(I.size());
  for (std::size_t k = 0; k < I.size(); ++k) s.push_back(Generator::t(I[k], J[k]).code());
  return Word(std::move(s));
}

RewriteSystem Presentation::complete(int maxDeg) const {
  return qfrt::complete(relations, alphabet(), maxDeg > 0 ? maxDeg : defaultDegreeBound());
}

namespace {

TensorSquare comultiplyLetter(const Generator& g, int n) {
  TensorSquare t;
  switch (g.kind) {
    case GenKind::DInverse:
      t.addTerm(Word::of(g), Word::of(g), 1);
      break;
    case GenKind::T:
      if (g.row < 1 || g.row > n || g.col < 1 || g.col > n) throw InputError("generator " + g.name() + " out of range");
      for (int k = 1; k <= n; ++k) t.addTerm(Word::of(Generator::t(g.row, k)), Word::of(Generator::t(k, g.col)), 1);
      break;
    case GenKind::X:
      throw InputError("comultiplication undefined on " + g.name());
  }
  return t;
}

}  // namespace

TensorSquare comultiply(const Word& w, int n) {
  TensorSquare acc;
  acc.addTerm(Word{}, Word{}, 1);
  for (const auto& g : w.generators()) acc = acc * comultiplyLetter(g, n);
  return acc;
}

TensorSquare comultiply(const NCPoly& p, int n) {
  TensorSquare out;
  for (const auto& [w, c] : p) {
    TensorSquare d = comultiply(w, n);
    d *= c;
    out += d;
  }
  return out;
}

std::vector<TripleTerm> comultiplyTwice(const Word& w, int n) {
  std::vector<TripleTerm> acc{{Word{}, Word{}, Word{}}};
  for (const auto& g : w.generators()) {
    std::vector<TripleTerm> next;
    if (g.kind == GenKind::DInverse) {
      for (auto t : acc) {
        t.first *= Word::of(g);
        t.second *= Word::of(g);
        t.third *= Word::of(g);
        next.push_back(std::move(t));
      }
    } else if (g.kind == GenKind::T) {
      for (const auto& t : acc)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            next.push_back({t.first * Word::of(Generator::t(g.row, k)), t.second * Word::of(Generator::t(k, l)),
                            t.third * Word::of(Generator::t(l, g.col))});
    } else {
      throw InputError("comultiplication undefined on " + g.name());
    }
    acc = std::move(next);
  }
  return acc;
}

Scalar counit(const Word& w) {
  for (const auto& g : w.generators()) {
    if (g.kind == GenKind::DInverse) continue;
    if (g.kind != GenKind::T) throw InputError("counit undefined on " + g.name());
    if (g.row != g.col) return 0;
  }
  return 1;
}

Scalar counit(const NCPoly& p) {
  Scalar s = 0;
  for (const auto& [w, c] : p) s += c * counit(w);
  return s;
}

std::vector<std::pair<Word, MultiIndex>> coactionOnPower(const MultiIndex& I, int n) {
  for (int i : I)
    if (i < 1 || i > n) throw InputError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  std::vector<std::pair<Word, MultiIndex>> out;
  for (auto& J : allMultiIndices(n, static_cast<int>(I.size()))) out.emplace_back(matrixWord(I, J), std::move(J));
  return out;
}

TensorSquare coact(const NCPoly& xPoly, int n) {
  TensorSquare out;
  for (const auto& [w, c] : xPoly) {
    MultiIndex I;
    for (const auto& g : w.generators()) {
      if (g.kind != GenKind::X) throw InputError("coaction expects x-generators, got " + g.name());
      I.push_back(g.row);
    }
    for (const auto& [tw, J] : coactionOnPower(I, n)) {
      Word xw;
      for (int j : J) xw *= Word::of(Generator::x(j));
      out.addTerm(tw, xw, c);
    }
  }
  return out;
}

CheckReport checkBiIdeal(const Presentation& P, const RewriteSystem& rs) {
  CheckReport report;
  for (const auto& r : P.relations) {
    const Scalar e = counit(r);
    if (!isZero(e)) {
      report.add({"counit " + r.str(), Verdict::Fail, "eps = " + toString(e)});
      continue;
    }
    TensorSquare residue = comultiply(r, P.dim).reduced(rs, rs);
    report.add({"coideal " + r.str(), vanishes(residue.isZero(), rs.converged()),
                residue.isZero() ? std::string{} : residue.str()});
  }
  return report;
}

}  // namespace qfrt
