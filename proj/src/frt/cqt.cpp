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

#include "frt/cqt.hpp"

namespace qfrt {

struct CqtForm::Cache {
  std::mutex mutex;
  std::map<std::pair<Word, Word>, Scalar, TensorSquare::KeyLess> values[2];
  std::map<Word, Matrix, DegLexLess> letterMatrices[2];
};

namespace {

int sideIndex(CqtSide s) { return s == CqtSide::R ? 0 : 1; }

void requireT(const Word& w, int n) {
  for (const auto& g : w.generators()) {
    if (g.kind == GenKind::DInverse) throw MathError("r is not evaluated on Dinv");
    if (g.kind != GenKind::T || g.row < 1 || g.row > n || g.col < 1 || g.col > n)
      throw InputError("r undefined on " + g.name());
  }
}

}  // namespace

CqtForm::CqtForm(const Braiding& c) : n_(c.dim()), cache_(std::make_shared<Cache>()) {
  const int n = n_;
  Matrix m(n * n, n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) m((i - 1) * n + j - 1, (k - 1) * n + l - 1) = c.coeff(j, i, k, l);
  auto inv = m.inverse();
  if (!inv) throw MathError("braiding not invertible; cqt inverse undefined");
  table_[0] = std::move(m);
  table_[1] = std::move(*inv);
}

Scalar CqtForm::generator(CqtSide side, int i, int k, int j, int l) const {
  return table_[sideIndex(side)]((i - 1) * n_ + j - 1, (k - 1) * n_ + l - 1);
}

const Matrix& CqtForm::letterMatrix(const Word& b, CqtSide side) const {
  auto& memo = cache_->letterMatrices[sideIndex(side)];
  if (auto it = memo.find(b); it != memo.end()) return it->second;
  Matrix acc = Matrix::identity(n_);
  for (const auto& g : b.generators()) {
    Matrix m(n_, n_);
    for (int i = 1; i <= n_; ++i)
      for (int k = 1; k <= n_; ++k) m(i - 1, k - 1) = generator(side, i, k, g.row, g.col);
    acc = side == CqtSide::R ? m * acc : acc * m;
  }
  return memo.emplace(b, std::move(acc)).first->second;
}

Scalar CqtForm::evalLocked(const Word& a, const Word& b, CqtSide side) const {
  if (a.empty()) return counit(b);
  if (b.empty()) return counit(a);
  if (a.size() == 1) {
    const Generator g = a.generators().front();
    return letterMatrix(b, side)(g.row - 1, g.col - 1);
  }
  auto& memo = cache_->values[sideIndex(side)];
  const auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Word head = a.sub(0, 1), rest = a.sub(1, a.size() - 1);
  Scalar sum = 0;
  const TensorSquare delta = comultiply(b, n_);
  for (const auto& [k, c] : delta.terms()) {
    const auto& [b1, b2] = k;
    const Scalar v = side == CqtSide::R ? evalLocked(head, b1, side) * evalLocked(rest, b2, side)
                                        : evalLocked(head, b2, side) * evalLocked(rest, b1, side);
    sum += c * v;
  }
  memo.emplace(key, sum);
  return sum;
}

Scalar CqtForm::eval(const Word& a, const Word& b, CqtSide side) const {
  requireT(a, n_);
  requireT(b, n_);
  std::lock_guard lock(cache_->mutex);
  return evalLocked(a, b, side);
}

Scalar evalR(const NCPoly& p, const NCPoly& q, const CqtForm& form, CqtSide side) {
  Scalar s = 0;
  for (const auto& [u, a] : p)
    for (const auto& [v, b] : q) s += a * b * form.eval(u, v, side);
  return s;
}

bool convolutionInverseHolds(const CqtForm& form) {
  const int n = form.dim();
  auto t = [](int i, int j) { return Word::of(Generator::t(i, j)); };
  for (int first = 0; first < 2; ++first) {
    const CqtSide s1 = first == 0 ? CqtSide::R : CqtSide::RInverse;
    const CqtSide s2 = first == 0 ? CqtSide::RInverse : CqtSide::R;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            Scalar sum = 0;
            for (int k = 1; k <= n; ++k)
              for (int l = 1; l <= n; ++l) sum += form.eval(t(i, k), t(j, l), s1) * form.eval(t(k, a), t(l, b), s2);
            if (sum != Scalar((i == a && j == b) ? 1 : 0)) return false;
          }
  }
  return true;
}

CheckReport checkCQT3(const RewriteSystem& rs, const CqtForm& form) {
  const int n = form.dim();
  CheckReport report;
  auto t = [](int i, int j) { return Word::of(Generator::t(i, j)); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          NCPoly e;
          for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) {
              e.addTerm(t(p, j) * t(q, l), form.generator(CqtSide::R, i, p, k, q));
              e.addTerm(t(k, q) * t(i, p), -form.generator(CqtSide::R, p, j, q, l));
            }
          const auto m = idealContains(e, rs);
          report.add({"cqt3 " + t(i, j).str() + ", " + t(k, l).str(), toVerdict(m.verdict),
                      m.verdict == Membership::Yes ? std::string{} : m.normalForm.str()});
        }
  return report;
}

Verdict grouplikeVerdict(const NCPoly& g, const RewriteSystem& rs, int n) {
  if (counit(g) != 1) return Verdict::Fail;
  TensorSquare d = comultiply(g, n) - TensorSquare::pure(g, g);
  return vanishes(d.reduced(rs, rs).isZero(), rs.converged());
}

NCPoly hayashiAuto(const NCPoly& g, const NCPoly& a, const CqtForm& form) {
  const int n = form.dim();
  NCPoly out;
  for (const auto& [w, c] : a)
    for (const auto& term : comultiplyTwice(w, n)) {
      const Scalar left = evalR(NCPoly(term.first), g, form, CqtSide::R);
      if (isZero(left)) continue;
      const Scalar right = evalR(NCPoly(term.third), g, form, CqtSide::RInverse);
      if (isZero(right)) continue;
      out.addTerm(term.second, c * left * right);
    }
  return out;
}

CheckReport checkNormality(const NCPoly& g, const RewriteSystem& rs, const CqtForm& form) {
  const int n = form.dim();
  CheckReport report;
  const Verdict grouplike = grouplikeVerdict(g, rs, n);
  report.add({"grouplike " + g.str(), grouplike, grouplike == Verdict::Pass ? "" : "Delta(g) != g (x) g"});
  if (grouplike != Verdict::Pass) return report;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const NCPoly t = NCPoly::of(Generator::t(i, j));
      const NCPoly e = g * t - hayashiAuto(g, t, form) * g;
      const auto m = idealContains(e, rs);
      report.add({"normal " + t.str(), toVerdict(m.verdict),
                  m.verdict == Membership::Yes ? std::string{} : m.normalForm.str()});
    }
  return report;
}

}  // namespace qfrt
