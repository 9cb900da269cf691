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

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "frt/braiding.hpp"

namespace qfrt {

enum class CqtSide { R, RInverse };

/// Coquasitriangular form of A(c), r(t_i^k, t_j^l) = c_ji^kl, together with
/// its convolution inverse on generators. Evaluation on words uses
///   r(ab, c) = r(a, c1) r(b, c2),     r(a, bc) = r(a2, b) r(a1, c),
///   rbar(ab, c) = rbar(a, c2) rbar(b, c1), rbar(a, bc) = rbar(a1, b) rbar(a2, c),
/// with r(1, a) = r(a, 1) = eps(a). Values are memoized; the cache is
/// shared between copies and guarded by a mutex.
class CqtForm {
 public:
  /// Throws MathError "braiding not invertible; cqt inverse undefined".
  explicit CqtForm(const Braiding& c);

  int dim() const { return n_; }
  /// r(t_i^k, t_j^l) or rbar(t_i^k, t_j^l).
  Scalar generator(CqtSide side, int i, int k, int j, int l) const;
  /// Bilinear value on two words of the t-alphabet. Throws MathError on
  /// Dinv and InputError on other foreign letters.
  Scalar eval(const Word& a, const Word& b, CqtSide side) const;

 private:
  struct Cache;
  Scalar evalLocked(const Word& a, const Word& b, CqtSide side) const;
  const Matrix& letterMatrix(const Word& b, CqtSide side) const;

  int n_;
  Matrix table_[2];  // ((i,j),(k,l)) -> value at (t_i^k, t_j^l)
  std::shared_ptr<Cache> cache_;
};

Scalar evalR(const NCPoly& p, const NCPoly& q, const CqtForm& form, CqtSide side = CqtSide::R);

/// sum r(t_i^k, t_j^l) rbar(t_k^a, t_l^b) = delta_i^a delta_j^b and the
/// same with r and rbar exchanged, evaluated through CqtForm::eval.
bool convolutionInverseHolds(const CqtForm& form);

/// sum r(a1, b1) a2 b2 - sum b1 a1 r(a2, b2) lies in the ideal, for every
/// pair of generators.
CheckReport checkCQT3(const RewriteSystem& rs, const CqtForm& form);

/// eps(g) = 1 and Delta(g) - g (x) g vanishes under rs (x) rs.
Verdict grouplikeVerdict(const NCPoly& g, const RewriteSystem& rs, int n);

/// J_g(a) = sum r(a1, g) a2 rbar(a3, g) on the representative a.
NCPoly hayashiAuto(const NCPoly& g, const NCPoly& a, const CqtForm& form);

/// g t_i^j - J_g(t_i^j) g lies in the ideal for every generator. The first
/// check records whether g is grouplike; when it is not, the rest is skipped.
CheckReport checkNormality(const NCPoly& g, const RewriteSystem& rs, const CqtForm& form);

}  // namespace qfrt
