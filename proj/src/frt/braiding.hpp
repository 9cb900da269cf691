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

#pragma once

#include <optional>

#include "bialgebra/presentation.hpp"
#include "ncalg/matrix.hpp"

namespace qfrt {

/// Exact comparison of (c (x) id)(id (x) c)(c (x) id) and
/// (id (x) c)(c (x) id)(id (x) c) on V^{(x)3}.
bool checkBraid(const MapTensor& c);

/// Solution of the braid equation on V (x) V,
/// c(x_i (x) x_j) = sum c_ij^kl x_k (x) x_l.
class Braiding {
 public:
  /// Throws MathError if c does not satisfy the braid equation.
  explicit Braiding(MapTensor c);

  /// c(x_i (x) x_j) = q_ij x_j (x) x_i.
  static Braiding diagonal(const Matrix& q);
  /// c = -tau.
  static Braiding minusFlip(int n);
  static Braiding flip(int n);

  int dim() const { return c_.dim(); }
  const MapTensor& map() const { return c_; }
  Scalar coeff(int i, int j, int k, int l) const { return c_.at({i, j}, {k, l}); }
  bool invertible() const { return invertible_; }

 private:
  MapTensor c_;
  bool invertible_ = false;
};

/// sum_{k,l} c_ij^kl t_k^r t_l^s - sum_{k,l} t_i^k t_j^l c_kl^rs for all
/// (i, j, r, s) in lexicographic order, zero relations dropped.
Presentation frtPresentation(const Braiding& c);

}  // namespace qfrt
