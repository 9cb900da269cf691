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
#include <vector>

#include "dvl/dvl.hpp"
#include "wgf/wgf.hpp"

namespace qfrt {

/// A(c)[D^-1]: the relations of A(c), D Dinv - 1, Dinv D - 1 and the
/// normality rules t_i^j Dinv - Dinv J(t_i^j).
struct LocalizedPresentation {
  int dim = 0;
  NCPoly D;
  std::vector<NCPoly> normalityRules;
  Presentation presentation;
  RewriteSystem system;
};

/// Refuses (MathError, or Undecided at the bound) unless D passes
/// checkNormality. maxDeg <= 0 selects the default bound.
LocalizedPresentation localize(const Presentation& P, const RewriteSystem& aSystem, const WGFData& w,
                               const CqtForm& form, int maxDeg = 0);

/// Images of the generators under the candidate antipode.
struct AntipodeCandidate {
  int dim = 0;
  std::vector<NCPoly> t;  // S(t_i^j) at (i-1)*dim + j-1
  NCPoly dInverse;        // S(Dinv)

  NCPoly image(const Generator& g) const;
  NCPoly apply(const NCPoly& p) const;  // anti-multiplicative extension
};

/// S(t_i^j) = T^j_i Dinv, S(Dinv) = D.
AntipodeCandidate antipodeCandidate(const WGFData& w);
/// eps(S(g)) = eps(g) for every generator, exactly.
CheckReport counitCompatibility(const AntipodeCandidate& S);

struct AntipodeReport {
  CheckReport antiAlgebra;  // S applied to every defining relation of L
  CheckReport right;        // a1 S(a2) = eps(a)
  CheckReport left;         // S(a1) a2 = eps(a)
  Verdict verdict() const { return combine(antiAlgebra.verdict, combine(right.verdict, left.verdict)); }
};
AntipodeReport antipodeVerify(const LocalizedPresentation& L, const AntipodeCandidate& S);

/// Dinv^k followed by a word in the t-generators.
bool isFractionNormal(const Word& w);

/// The surjection H(ev) -> A(c)[D^-1] with t_i^j -> t_i^j,
/// t_{n+i}^{n+j} -> T^i_j Dinv and the mixed generators -> 0, for the block
/// form b(x_i, omega^j) = delta_ij, b(omega^i, x_j) = [omega^i x_j]. Checks
/// that every relation of H(ev) lands in the ideal of L.
CheckReport hEvForwardMapCheck(const WGFData& w, const LocalizedPresentation& L);

struct EnvelopeOptions {
  int maxDeg = 0;
  std::optional<AntipodeCandidate> antipodeOverride;
  /// Stop after the Lagrange identity (plus the informational jform stage).
  bool throughLagrange = false;
};

struct EnvelopeResult {
  std::vector<Stage> stages;
  Verdict verdict = Verdict::Pass;
  std::optional<Presentation> frt;
  std::optional<Presentation> localized;
};

/// braid -> frt -> cqt -> wgf -> determinant -> minors -> lagrange ->
/// normality -> localize -> antipode -> jform, stopping after the first
/// stage that does not pass.
EnvelopeResult envelopeReport(const MapTensor& c, const GradedAlgebra& B, const EnvelopeOptions& options = {});

}  // namespace qfrt
