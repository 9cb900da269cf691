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

#include "bialgebra/universal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace qfrt {

std::vector<NCPoly> colinearityRelations(const MapTensor& f) {
  const int n = f.dim();
  // Column view: K -> list of (J, f_J^K) for the first sum.
  std::map<MultiIndex, std::vector<std::pair<MultiIndex, Scalar>>> byOutput;
  for (const auto& [J, row] : f.rows())
    for (const auto& [K, c] : row) byOutput[K].emplace_back(J, c);

  std::vector<NCPoly> out;
  const auto outIndices = allMultiIndices(n, f.outPower());
  for (const auto& I : allMultiIndices(n, f.inPower())) {
    for (const auto& K : outIndices) {
      NCPoly rel;
      if (auto it = byOutput.find(K); it != byOutput.end())
        for (const auto& [J, c] : it->second) rel.addTerm(matrixWord(I, J), c);
      for (const auto& [J, c] : f.image(I)) rel.addTerm(matrixWord(J, K), -c);
      if (!rel.isZero()) out.push_back(std::move(rel));
    }
  }
  return out;
}

Presentation universalBialgebra(const std::vector<MapTensor>& F, int dim) {
  Presentation P;
  P.dim = dim;
  for (const auto& f : F) {
    if (P.dim < 0) P.dim = f.dim();
    if (f.dim() != P.dim) throw InputError("map family has mixed dimensions");
  }
  if (P.dim < 0) throw InputError("dimension required for an empty map family");

  struct Keyed {
    int weight;
    std::size_t mapIndex, order;
    NCPoly rel;
  };
  std::vector<Keyed> all;
  for (std::size_t m = 0; m < F.size(); ++m) {
    auto rels = colinearityRelations(F[m]);
    for (std::size_t k = 0; k < rels.size(); ++k)
      all.push_back({F[m].inPower() + F[m].outPower(), m, k, std::move(rels[k])});
  }
  std::stable_sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) { return a.weight < b.weight; });
  for (auto& k : all) P.relations.push_back(std::move(k.rel));
  return P;
}

std::vector<MapTensor> gradingProjectors(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  std::set<int> distinct(degrees.begin(), degrees.end());
  std::vector<MapTensor> E;
  for (int p : distinct) {
    MapTensor e(n, 1, 1, "e_" + std::to_string(p));
    for (int i = 1; i <= n; ++i)
      if (degrees[i - 1] == p) e.add({i}, {i}, 1);
    E.push_back(std::move(e));
  }
  return E;
}

GradedUniversal gradedUniversal(const std::vector<MapTensor>& F, const std::vector<int>& degrees) {
  GradedUniversal out;
  const int n = static_cast<int>(degrees.size());
  auto degreeOf = [&](const MultiIndex& I) {
    int d = 0;
    for (int i : I) d += degrees[i - 1];
    return d;
  };
  for (const auto& f : F) {
    if (f.dim() != n) throw InputError("grading has " + std::to_string(n) + " entries but map has dimension " + std::to_string(f.dim()));
    bool graded = true;
    for (const auto& [I, row] : f.rows())
      for (const auto& [J, c] : row)
        if (degreeOf(I) != degreeOf(J)) graded = false;
    if (!graded) out.nonGraded.push_back(f.name().empty() ? "<unnamed>" : f.name());
  }
  std::vector<MapTensor> family = gradingProjectors(degrees);
  family.insert(family.end(), F.begin(), F.end());
  out.presentation = universalBialgebra(family, n);
  return out;
}

Answer checkColinear(const MapTensor& f, const RewriteSystem& rs) {
  bool open = false;
  for (const auto& r : colinearityRelations(f)) {
    switch (idealContains(r, rs).verdict) {
      case Membership::Yes:
        break;
      case Membership::NoDefinitive:
        return Answer::No;
      case Membership::NoUpToBound:
        open = true;
        break;
    }
  }
  return open ? Answer::Unknown : Answer::Yes;
}

PathAlgebra pathAlgebra(const Quiver& q) {
  struct Path {
    int source, target;
    std::vector<int> arrows;  // composition order: leftmost applied last
  };
  for (const auto& a : q.arrows)
    if (a.source < 1 || a.source > q.vertexCount || a.target < 1 || a.target > q.vertexCount)
      throw InputError("arrow endpoint out of range");

  std::vector<Path> basis;
  for (int v = 1; v <= q.vertexCount; ++v) basis.push_back({v, v, {}});
  std::vector<Path> layer;
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
    layer.push_back({q.arrows[a].source, q.arrows[a].target, {a}});
  while (!layer.empty()) {
    if (basis.size() > 4096) throw InputError("quiver has oriented cycles; path algebra is infinite-dimensional");
    basis.insert(basis.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (q.arrows[a].source == p.target) {
          Path np{p.source, q.arrows[a].target, {a}};
          np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
          next.push_back(std::move(np));
        }
    layer = std::move(next);
  }

  PathAlgebra A;
  A.dim = static_cast<int>(basis.size());
  A.multiplication = MapTensor(A.dim, 2, 1, "m");
  A.unit = MapTensor(A.dim, 0, 1, "u");
  for (const auto& p : basis) A.lengths.push_back(static_cast<int>(p.arrows.size()));
  auto indexOf = [&](const Path& p) {
    for (int i = 0; i < A.dim; ++i)
      if (basis[i].source == p.source && basis[i].target == p.target && basis[i].arrows == p.arrows) return i + 1;
    return 0;
  };
  for (int i = 0; i < A.dim; ++i) {
    const auto& p = basis[i];
    if (p.arrows.empty()) A.unit.add({}, {i + 1}, 1);
    for (int j = 0; j < A.dim; ++j) {
      const auto& r = basis[j];
      if (p.source != r.target) continue;
      Path prod;
      if (p.arrows.empty())
        prod = r;
      else if (r.arrows.empty())
        prod = p;
      else {
        prod = {r.source, p.target, p.arrows};
        prod.arrows.insert(prod.arrows.end(), r.arrows.begin(), r.arrows.end());
      }
      A.multiplication.add({i + 1, j + 1}, {indexOf(prod)}, 1);
    }
  }
  return A;
}

}  // namespace qfrt
