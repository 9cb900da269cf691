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

#include "frt/cqt.hpp"

namespace qfrt {

/// Quotient of the tensor algebra on x_1..x_n by homogeneous relations of
/// degree >= 2.
struct GradedAlgebra {
  int dim = 0;
  std::vector<NCPoly> relations;
};

enum class WgfAxiom { WGF1, WGF2, WGF3, WGF4 };
const char* toString(WgfAxiom a);

/// Failed or undecided axiom. `undecided` is set when a degree bound was
/// reached before the axiom could be settled.
class WgfError : public MathError {
 public:
  WgfError(WgfAxiom axiom, const std::string& what, bool undecided = false)
      : MathError(std::string(toString(axiom)) + ": " + what), axiom_(axiom), undecided_(undecided) {}
  WgfAxiom axiom() const { return axiom_; }
  bool undecided() const { return undecided_; }

 private:
  WgfAxiom axiom_;
  bool undecided_;
};

/// Weakly graded Frobenius data of B over A(c). Matrices are 0-based.
struct WGFData {
  int dim = 0;
  GradedAlgebra algebra;
  RewriteSystem bSystem;
  std::vector<std::size_t> dims;  // dim B^d for d = 0..top
  int top = 0;
  Word volume;
  std::vector<Word> coBasis;  // normal words w_k of degree top - 1
  Matrix leftPairing;         // x_i w_k = P_ik volume
  Matrix rightPairing;        // w_k x_i = P'_ki volume
  std::vector<NCPoly> omega;  // x_i omega^j = delta_i^j volume
  NCPoly determinant;         // rho(volume) = D (x) volume, A(c) normal form
  /// T[a][b] = T^a_b with lambda(omega^a) = sum_b T^a_b (x) omega^b,
  /// entries in A(c) normal form.
  std::vector<std::vector<NCPoly>> T;
};

/// Checks WGF2, WGF3, WGF4 and then WGF1 and fills in the data. `aSystem`
/// is a completion of frtPresentation(c); `maxDeg` bounds the scan for the
/// top degree and the completion of B (maxDeg <= 0 selects a default).
WGFData buildWGF(const GradedAlgebra& B, const Braiding& c, const RewriteSystem& aSystem, int maxDeg = 0);

struct QuantumDeterminant {
  NCPoly D;
  Verdict grouplike;
};
QuantumDeterminant quantumDeterminant(const WGFData& w, const RewriteSystem& aSystem);

const std::vector<NCPoly>& omegaBasis(const WGFData& w);
const std::vector<std::vector<NCPoly>>& minorsT(const WGFData& w);

/// eps(T^a_b) = delta exactly, Delta(T^a_b) = sum_k T^a_k (x) T^k_b, and
/// sum_b T^a_b (x) omega^b re-expands to lambda(omega^a).
CheckReport comatrixCheck(const WGFData& w, const RewriteSystem& aSystem);

/// sum_k t_i^k T^j_k - delta_i^j D lies in the ideal of A(c).
CheckReport lagrangeCheck(const WGFData& w, const RewriteSystem& aSystem);

/// sum_k J(T^k_i) t_k^j - delta_i^j D lies in the ideal of A(c), with J the
/// Hayashi automorphism of D. Not expected to hold in general.
CheckReport jFormCheck(const WGFData& w, const RewriteSystem& aSystem, const CqtForm& form);

}  // namespace qfrt
