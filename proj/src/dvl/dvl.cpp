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

#include "dvl/dvl.hpp"

namespace qfrt {

namespace {

NCPoly t(int i, int j) { return NCPoly::of(Generator::t(i, j)); }

std::string pairLabel(const char* what, int i, int j) {
  return std::string(what) + " " + std::to_string(i) + "," + std::to_string(j);
}

void addMembership(CheckReport& report, std::string label, const NCPoly& e, const RewriteSystem& rs) {
  const auto m = idealContains(e, rs);
  report.add({std::move(label), toVerdict(m.verdict), m.verdict == Membership::Yes ? "" : m.normalForm.str()});
}

}  // namespace

BilinearForm::BilinearForm(Matrix b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols() || b_.rows() == 0) throw InputError("bilinear form must be a non-empty square matrix");
  auto inv = b_.inverse();
  if (!inv) throw MathError("bilinear form is degenerate");
  inv_ = std::move(*inv);
}

MapTensor BilinearForm::asMap() const {
  const int m = dim();
  MapTensor f(m, 2, 0, "b");
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) f.add({i, j}, {}, lower(i, j));
  return f;
}

Presentation dvlPresentation(const BilinearForm& B) {
  const int m = B.dim();
  Presentation P;
  P.dim = m;
  for (int l = 1; l <= m; ++l)
    for (int r = 1; r <= m; ++r) {
      NCPoly rel(B.lower(l, r) * -1);
      for (int mu = 1; mu <= m; ++mu)
        for (int nu = 1; nu <= m; ++nu)
          if (!isZero(B.lower(mu, nu))) rel += B.lower(mu, nu) * (t(l, mu) * t(r, nu));
      if (!rel.isZero()) P.relations.push_back(std::move(rel));
    }
  return P;
}

std::vector<NCPoly> dvlSecondFamily(const BilinearForm& B) {
  const int m = B.dim();
  std::vector<NCPoly> out;
  for (int l = 1; l <= m; ++l)
    for (int r = 1; r <= m; ++r) {
      NCPoly e(B.upper(l, r) * -1);
      for (int mu = 1; mu <= m; ++mu)
        for (int nu = 1; nu <= m; ++nu)
          if (!isZero(B.upper(mu, nu))) e += B.upper(mu, nu) * (t(mu, l) * t(nu, r));
      out.push_back(std::move(e));
    }
  return out;
}

NCPoly dvlAntipode(const BilinearForm& B, int i, int j) {
  const int m = B.dim();
  NCPoly s;
  for (int a = 1; a <= m; ++a)
    for (int c = 1; c <= m; ++c) {
      const Scalar v = B.lower(i, a) * B.upper(c, j);
      if (!isZero(v)) s.addTerm(Word::of(Generator::t(c, a)), v);
    }
  return s;
}

CheckReport dvlRedundancyCheck(const BilinearForm& B, const RewriteSystem& rs) {
  CheckReport report;
  const int m = B.dim();
  const auto family = dvlSecondFamily(B);
  for (int l = 1; l <= m; ++l)
    for (int r = 1; r <= m; ++r) addMembership(report, pairLabel("redundant", l, r), family[(l - 1) * m + r - 1], rs);
  return report;
}

CheckReport dvlRedundancyCheck(const BilinearForm& B, int maxDeg) {
  return dvlRedundancyCheck(B, dvlPresentation(B).complete(maxDeg));
}

CheckReport dvlAntipodeCheck(const BilinearForm& B, const Presentation& P, const RewriteSystem& rs) {
  const int m = B.dim();
  std::vector<NCPoly> images(static_cast<std::size_t>(m * m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) images[(i - 1) * m + j - 1] = dvlAntipode(B, i, j);
  auto S = [&](const Generator& g) -> NCPoly {
    if (g.kind != GenKind::T) throw InputError("antipode undefined on " + g.name());
    return images[(g.row - 1) * m + g.col - 1];
  };

  CheckReport report;
  for (const auto& r : P.relations) addMembership(report, "anti-algebra " + r.str(), antiSubstitute(r, S), rs);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      NCPoly right(i == j ? -1 : 0), left(i == j ? -1 : 0);
      for (int k = 1; k <= m; ++k) {
        right += t(i, k) * S(Generator::t(k, j));
        left += S(Generator::t(i, k)) * t(k, j);
      }
      addMembership(report, pairLabel("right axiom", i, j), right, rs);
      addMembership(report, pairLabel("left axiom", i, j), left, rs);
    }
  return report;
}

CheckReport dvlAntipodeCheck(const BilinearForm& B, int maxDeg) {
  const Presentation P = dvlPresentation(B);
  return dvlAntipodeCheck(B, P, P.complete(maxDeg));
}

HEv hEvPresentation(int n, const Matrix& phi) {
  if (n < 1 || phi.rows() != static_cast<std::size_t>(n) || phi.cols() != static_cast<std::size_t>(n))
    throw InputError("Phi must be an n x n matrix");
  if (!phi.inverse()) throw MathError("Phi is singular");
  return hEvFromBlocks(n, phi, Matrix::identity(n));
}

HEv hEvFromBlocks(int n, const Matrix& upper, const Matrix& lower) {
  Matrix b(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b(i, n + j) = upper(i, j);
      b(n + i, j) = lower(i, j);
    }
  HEv h{n, BilinearForm(std::move(b)), {}};
  h.presentation = dvlPresentation(h.form);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      h.presentation.relations.push_back(t(i, n + j));
      h.presentation.relations.push_back(t(n + i, j));
    }
  return h;
}

CheckReport hEvStabilityCheck(const HEv& h, const RewriteSystem& rs) {
  const int n = h.n;
  CheckReport report;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      addMembership(report, "S(" + Generator::t(i, n + j).name() + ")", dvlAntipode(h.form, i, n + j), rs);
      addMembership(report, "S(" + Generator::t(n + i, j).name() + ")", dvlAntipode(h.form, n + i, j), rs);
    }
  return report;
}

}  // namespace qfrt
