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

#include "frt/braiding.hpp"

namespace qfrt {

bool checkBraid(const MapTensor& c) {
  if (c.inPower() != 2 || c.outPower() != 2) throw InputError("braiding must map V(x)V to V(x)V");
  const MapTensor id = MapTensor::identity(c.dim());
  const MapTensor c12 = c.tensor(id), c23 = id.tensor(c);
  return c12.compose(c23).compose(c12) == c23.compose(c12).compose(c23);
}

namespace {

Matrix squareMatrix(const MapTensor& c) {
  const int n = c.dim();
  Matrix m(n * n, n * n);
  for (const auto& [I, row] : c.rows())
    for (const auto& [J, v] : row) m((I[0] - 1) * n + I[1] - 1, (J[0] - 1) * n + J[1] - 1) = v;
  return m;
}

}  // namespace

Braiding::Braiding(MapTensor c) : c_(std::move(c)) {
  if (!checkBraid(c_)) throw MathError("map does not satisfy the braid equation");
  invertible_ = squareMatrix(c_).inverse().has_value();
}

Braiding Braiding::diagonal(const Matrix& q) {
  if (q.rows() != q.cols() || q.rows() == 0) throw InputError("diagonal braiding needs a square matrix");
  const int n = static_cast<int>(q.rows());
  MapTensor c(n, 2, 2, "c");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c.add({i, j}, {j, i}, q(i - 1, j - 1));
  return Braiding(std::move(c));
}

Braiding Braiding::minusFlip(int n) {
  MapTensor c(n, 2, 2, "c");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c.add({i, j}, {j, i}, -1);
  return Braiding(std::move(c));
}

Braiding Braiding::flip(int n) {
  MapTensor c(n, 2, 2, "c");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c.add({i, j}, {j, i}, 1);
  return Braiding(std::move(c));
}

Presentation frtPresentation(const Braiding& c) {
  const int n = c.dim();
  Presentation P;
  P.dim = n;
  for (const auto& I : allMultiIndices(n, 2)) {
    for (const auto& K : allMultiIndices(n, 2)) {
      NCPoly rel;
      for (const auto& [J, v] : c.map().image(I)) rel.addTerm(matrixWord(J, K), v);
      for (const auto& J : allMultiIndices(n, 2)) {
        const Scalar v = c.map().at(J, K);
        if (!isZero(v)) rel.addTerm(matrixWord(I, J), -v);
      }
      if (!rel.isZero()) P.relations.push_back(std::move(rel));
    }
  }
  return P;
}

}  // namespace qfrt
