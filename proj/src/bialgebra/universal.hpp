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

#include "bialgebra/presentation.hpp"

namespace qfrt {

/// Generators sum_J (t_I^J f_J^K - f_I^J t_J^K) of the ideal forcing f to
/// be colinear, one per (I, K), zero polynomials dropped, in (I, K)
/// lexicographic order.
std::vector<NCPoly> colinearityRelations(const MapTensor& f);

/// A(F) = TC / sum_f I_f. `dim` is required when F is empty.
Presentation universalBialgebra(const std::vector<MapTensor>& F, int dim = -1);

struct GradedUniversal {
  Presentation presentation;
  /// Names of maps in F that do not preserve the grading.
  std::vector<std::string> nonGraded;
};

/// A_gr(F) = A(E u F) with E the projectors onto the homogeneous
/// components of the grading `degrees` (one entry per basis vector).
GradedUniversal gradedUniversal(const std::vector<MapTensor>& F, const std::vector<int>& degrees);

/// Projectors onto each degree component, in increasing degree.
std::vector<MapTensor> gradingProjectors(const std::vector<int>& degrees);

/// Yes iff every colinearity relation of f lies in the ideal of rs.
Answer checkColinear(const MapTensor& f, const RewriteSystem& rs);

/// Finite acyclic quiver; vertices are 1..vertexCount, arrows go
/// source -> target.
struct Quiver {
  int vertexCount = 0;
  struct Arrow {
    int source, target;
  };
  std::vector<Arrow> arrows;
};

/// Path algebra kQ in its basis of paths (vertices first, then arrows,
/// then longer paths by length). Product p.q is the path "p after q",
/// nonzero iff source(p) = target(q).
struct PathAlgebra {
  int dim = 0;
  std::vector<int> lengths;  // grading by path length, per basis vector
  MapTensor multiplication;
  MapTensor unit;
};
PathAlgebra pathAlgebra(const Quiver& q);

}  // namespace qfrt
