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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qfrt {

/// Generator kinds, listed in monomial-order rank: the inverse of the
/// quantum determinant is the smallest letter, then matrix coefficients
/// t_i^j (row-major), then basis vectors x_i.
enum class GenKind : std::uint8_t { DInverse = 0, T = 1, X = 2 };

/// A letter of the free monoid. Indices are 1-based; `col` is unused (0)
/// for x and Dinv. The packed code is order-preserving.
struct Generator {
  GenKind kind = GenKind::T;
  std::uint16_t row = 0;
  std::uint16_t col = 0;

  static Generator t(int i, int j) { return {GenKind::T, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)}; }
  static Generator x(int i) { return {GenKind::X, static_cast<std::uint16_t>(i), 0}; }
  static Generator dInverse() { return {GenKind::DInverse, 0, 0}; }

  char32_t code() const {
    return static_cast<char32_t>((static_cast<std::uint32_t>(kind) << 24) | (std::uint32_t{row} << 12) | col);
  }
  static Generator fromCode(char32_t c) {
    return {static_cast<GenKind>(c >> 24), static_cast<std::uint16_t>((c >> 12) & 0xfff),
            static_cast<std::uint16_t>(c & 0xfff)};
  }

  std::string name() const;

  friend auto operator<=>(const Generator& a, const Generator& b) { return a.code() <=> b.code(); }
  friend bool operator==(const Generator& a, const Generator& b) { return a.code() == b.code(); }
};

/// Element of the free monoid on generators. The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::u32string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Generator> gens);
  static Word of(const Generator& g) { return Word(std::u32string(1, g.code())); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return Generator::fromCode(letters_[i]); }
  const std::u32string& letters() const { return letters_; }

  Word sub(std::size_t pos, std::size_t len) const { return Word(letters_.substr(pos, len)); }
  Word reversed() const { return Word(std::u32string(letters_.rbegin(), letters_.rend())); }
  std::vector<Generator> generators() const;

  /// Position of the first occurrence of `factor`, or npos.
  std::size_t find(const Word& factor) const { return letters_.find(factor.letters_); }
  static constexpr std::size_t npos() { return std::u32string::npos; }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  Word& operator*=(const Word& b) {
    letters_ += b.letters_;
    return *this;
  }
  friend bool operator==(const Word&, const Word&) = default;

  std::string str() const;

 private:
  std::u32string letters_;
};

/// Degree-lexicographic order: shorter words first, ties broken
/// lexicographically by generator rank. Total, multiplicative and
/// well-founded on words of bounded length.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::u32string>{}(w.letters()); }
};

/// Finite generator alphabet used to validate polynomials.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  /// {t_i^j : 1 <= i,j <= n}, optionally with Dinv.
  static Alphabet matrix(int n, bool withDInverse = false);
  /// {x_1, ..., x_n}.
  static Alphabet vectors(int n);

  bool contains(const Generator& g) const;
  bool contains(const Word& w) const;
  const std::vector<Generator>& generators() const { return gens_; }
  Alphabet merged(const Alphabet& other) const;

 private:
  std::vector<Generator> gens_;  // sorted, unique
};

}  // namespace qfrt
