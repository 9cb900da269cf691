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

#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace qfrt {

/// Noncommutative polynomial: finitely supported map Word -> Scalar.
/// Zero coefficients are never stored; iteration runs in increasing
/// degree-lex order, so the leading term is the last one.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DegLexLess>;

  NCPoly() = default;
  NCPoly(const Scalar& c);  // NOLINT: constants convert implicitly
  NCPoly(int c) : NCPoly(Scalar(c)) {}
  NCPoly(const Word& w, const Scalar& c = 1);
  static NCPoly of(const Generator& g, const Scalar& c = 1) { return NCPoly(Word::of(g), c); }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  /// Largest word in degree-lex order. Precondition: nonzero.
  const Word& leadingWord() const { return terms_.rbegin()->first; }
  const Scalar& leadingCoefficient() const { return terms_.rbegin()->second; }
  /// Maximum word length, -1 for the zero polynomial.
  int degree() const { return isZero() ? -1 : static_cast<int>(leadingWord().size()); }
  bool isHomogeneous() const;
  Scalar coefficient(const Word& w) const;
  /// Coefficient of the empty word.
  Scalar constantTerm() const { return coefficient(Word{}); }

  void addTerm(const Word& w, const Scalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& s);
  NCPoly operator-() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& s) { return a *= s; }
  friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(int s, NCPoly a) { return a *= Scalar(s); }
  friend NCPoly operator*(NCPoly a, int s) { return a *= Scalar(s); }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Scaled so the leading coefficient is 1. Zero stays zero.
  NCPoly monic() const;
  /// Word-wise reversal (the linear anti-automorphism of the free algebra).
  NCPoly reversed() const;
  /// u * this * v for words u, v.
  NCPoly sandwich(const Word& u, const Word& v) const;

  std::string str() const;

 private:
  Terms terms_;
};

/// Algebra map of the free algebra given by letter images; letters
/// absent from `image` are left unchanged.
template <class ImageFn>
NCPoly substitute(const NCPoly& p, ImageFn&& image) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    NCPoly term(c);
    for (const auto& g : w.generators()) term = term * image(g);
    out += term;
  }
  return out;
}

/// Anti-algebra map: letters are substituted and each word's order is
/// reversed, so image(ab) = image(b) image(a).
template <class ImageFn>
NCPoly antiSubstitute(const NCPoly& p, ImageFn&& image) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    NCPoly term(c);
    for (const auto& g : w.generators()) term = image(g) * term;
    out += term;
  }
  return out;
}

}  // namespace qfrt
