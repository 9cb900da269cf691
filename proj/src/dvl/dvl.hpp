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

#include <vector>

#include "bialgebra/presentation.hpp"
#include "ncalg/matrix.hpp"

namespace qfrt {

/// Non-degenerate bilinear form b(x_i (x) x_j) = b_ij on an m-dimensional
/// space, with inverse entries b^ij.
class BilinearForm {
 public:
  /// Throws MathError when `b` is singular and InputError when not square.
  explicit BilinearForm(Matrix b);

  int dim() const { return static_cast<int>(b_.rows()); }
  const Matrix& matrix() const { return b_; }
  const Matrix& inverse() const { return inv_; }
  /// 1-based b_ij and b^ij.
  const Scalar& lower(int i, int j) const { return b_(i - 1, j - 1); }
  const Scalar& upper(int i, int j) const { return inv_(i - 1, j - 1); }
  /// b as a map V (x) V -> k.
  MapTensor asMap() const;

 private:
  Matrix b_, inv_;
};

/// sum b_{mu nu} t_lambda^mu t_rho^nu - b_{lambda rho} for all (lambda, rho).
Presentation dvlPresentation(const BilinearForm& B);

/// sum b^{mu nu} t_mu^lambda t_nu^rho - b^{lambda rho}, the second family of
/// defining relations that is never imposed.
std::vector<NCPoly> dvlSecondFamily(const BilinearForm& B);

/// S(t_i^j) = sum b_{ia} t_c^a b^{cj}, the entries of the right inverse
/// B t^T B^{-1} of the generator matrix t.
NCPoly dvlAntipode(const BilinearForm& B, int i, int j);

/// Every element of the second family lies in the ideal of `rs`.
CheckReport dvlRedundancyCheck(const BilinearForm& B, const RewriteSystem& rs);
CheckReport dvlRedundancyCheck(const BilinearForm& B, int maxDeg = 0);

/// (a) S applied anti-multiplicatively to every relation of P lies in the
/// ideal, (b) sum_k t_i^k S(t_k^j) = delta, (c) sum_k S(t_i^k) t_k^j = delta.
CheckReport dvlAntipodeCheck(const BilinearForm& B, const Presentation& P, const RewriteSystem& rs);
CheckReport dvlAntipodeCheck(const BilinearForm& B, int maxDeg = 0);

/// H(ev_l, ev_r): the DVL algebra of W = V (+) V* for the block form with
/// b(phi_i, x_j) = delta_ij and b(x_i, phi_j) = Phi_ij, quotiented by the
/// projector relations t_i^{n+j} = 0 = t_{n+i}^j.
struct HEv {
  int n = 0;
  BilinearForm form;
  Presentation presentation;
};
/// Throws MathError when Phi is singular.
HEv hEvPresentation(int n, const Matrix& phi);
/// Same construction for the block form b(x_i, phi_j) = upper_ij,
/// b(phi_i, x_j) = lower_ij.
HEv hEvFromBlocks(int n, const Matrix& upper, const Matrix& lower);
/// Antipode images of the projector generators vanish in the quotient.
CheckReport hEvStabilityCheck(const HEv& h, const RewriteSystem& rs);

}  // namespace qfrt
