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
#include <string>
#include <vector>

#include "ncalg/scalar.hpp"

namespace qfrt {

/// Multi-index into a basis {x_1..x_n}; entries are 1-based. The empty
/// multi-index is the basis vector 1 of V^{(x)0} = k.
using MultiIndex = std::vector<int>;

/// All of {1..n}^length in lexicographic order.
std::vector<MultiIndex> allMultiIndices(int n, int length);
std::string toString(const MultiIndex& I);

/// Linear map V^{(x)a} -> V^{(x)b}, f(x_I) = sum_J f_I^J x_J, stored sparsely.
class MapTensor {
 public:
  using Row = std::map<MultiIndex, Scalar>;

  MapTensor() = default;
  MapTensor(int dim, int inPower, int outPower, std::string name = {});
  static MapTensor identity(int dim, int power = 1);

  int dim() const { return dim_; }
  int inPower() const { return inPower_; }
  int outPower() const { return outPower_; }
  const std::string& name() const { return name_; }
  void setName(std::string n) { name_ = std::move(n); }

  /// Adds c to f_I^J. Throws InputError on bad lengths or indices.
  void add(const MultiIndex& in, const MultiIndex& out, const Scalar& c);
  Scalar at(const MultiIndex& in, const MultiIndex& out) const;
  /// f(x_I) as a sparse vector; empty when f(x_I) = 0.
  const Row& image(const MultiIndex& in) const;
  const std::map<MultiIndex, Row>& rows() const { return rows_; }
  bool isZero() const { return rows_.empty(); }

  /// this o g.
  MapTensor compose(const MapTensor& g) const;
  /// this (x) h acting on V^{(x)(a+a')}.
  MapTensor tensor(const MapTensor& h) const;

  friend bool operator==(const MapTensor& a, const MapTensor& b) {
    return a.dim_ == b.dim_ && a.inPower_ == b.inPower_ && a.outPower_ == b.outPower_ && a.rows_ == b.rows_;
  }

 private:
  int dim_ = 0, inPower_ = 0, outPower_ = 0;
  std::string name_;
  std::map<MultiIndex, Row> rows_;
};

}  // namespace qfrt
