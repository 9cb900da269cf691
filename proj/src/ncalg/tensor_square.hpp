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
#include <utility>

#include "ncalg/rewrite.hpp"

namespace qfrt {

/// Element of TC (x) TC, stored in the basis of pairs of words.
class TensorSquare {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      DegLexLess less;
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return less(a.second, b.second);
    }
  };
  using Terms = std::map<Key, Scalar, KeyLess>;

  TensorSquare() = default;
  static TensorSquare pure(const NCPoly& left, const NCPoly& right);

  void addTerm(const Word& l, const Word& r, const Scalar& c);
  TensorSquare& operator+=(const TensorSquare& o);
  TensorSquare& operator-=(const TensorSquare& o);
  TensorSquare& operator*=(const Scalar& s);
  /// Factorwise product (a (x) b)(c (x) d) = ac (x) bd.
  friend TensorSquare operator*(const TensorSquare& a, const TensorSquare& b);
  friend TensorSquare operator-(TensorSquare a, const TensorSquare& b) { return a -= b; }
  friend TensorSquare operator+(TensorSquare a, const TensorSquare& b) { return a += b; }

  bool isZero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Applies the normal-form map of `left` to the first factor and of
  /// `right` to the second; the result is zero iff the element vanishes in
  /// A (x) B (given converged systems).
  TensorSquare reduced(const RewriteSystem& left, const RewriteSystem& right) const;

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace qfrt
