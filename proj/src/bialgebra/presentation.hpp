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

#include <string>
#include <vector>

#include "bialgebra/map_tensor.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/tensor_square.hpp"
#include "ncalg/verdict.hpp"

namespace qfrt {

/// Word t_I^J = t_{i1}^{j1} ... t_{ia}^{ja}.
Word matrixWord(const MultiIndex& I, const MultiIndex& J);

/// Bialgebra presented as a quotient of the free bialgebra TC on the
/// matrix coalgebra, Delta(t_i^j) = sum_k t_i^k (x) t_k^j and
/// eps(t_i^j) = delta_i^j, optionally extended by the grouplike Dinv.
struct Presentation {
  int dim = 0;
  bool withDInverse = false;
  std::vector<NCPoly> relations;

  Alphabet alphabet() const { return Alphabet::matrix(dim, withDInverse); }
  int defaultDegreeBound() const { return qfrt::defaultDegreeBound(relations); }
  /// Completion of the relation ideal; maxDeg <= 0 selects the default.
  RewriteSystem complete(int maxDeg = 0) const;
};

/// Comultiplication of the free bialgebra. Dinv is grouplike.
TensorSquare comultiply(const NCPoly& p, int n);
TensorSquare comultiply(const Word& w, int n);
/// Two-fold comultiplication as a list of (a1, a2, a3) words with scalars
/// for a single word.
struct TripleTerm {
  Word first, second, third;
};
std::vector<TripleTerm> comultiplyTwice(const Word& w, int n);
Scalar counit(const NCPoly& p);
Scalar counit(const Word& w);

/// rho(x_I) = sum_J t_I^J (x) x_J, returned as (t_I^J, J) pairs in
/// lexicographic J order.
std::vector<std::pair<Word, MultiIndex>> coactionOnPower(const MultiIndex& I, int n);
/// Coaction of TC on the tensor algebra TV, extended linearly: the first
/// factor is a t-word, the second an x-word.
TensorSquare coact(const NCPoly& xPoly, int n);

/// Checks that every relation of P generates a bi-ideal: eps(r) = 0
/// exactly and (pi (x) pi) Delta(r) = 0 under `rs` (a completion of P).
CheckReport checkBiIdeal(const Presentation& P, const RewriteSystem& rs);

}  // namespace qfrt
