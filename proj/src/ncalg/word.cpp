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

#include "ncalg/word.hpp"

#include <algorithm>

namespace qfrt {

std::string Generator::name() const {
  switch (kind) {
    case GenKind::DInverse:
      return "Dinv";
    case GenKind::T:
      return "t_" + std::to_string(row) + "^" + std::to_string(col);
    case GenKind::X:
      return "x_" + std::to_string(row);
  }
  return "?";
}

Word::Word(std::initializer_list<Generator> gens) {
  letters_.reserve(gens.size());
  for (const auto& g : gens) letters_.push_back(g.code());
}

std::vector<Generator> Word::generators() const {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (char32_t c : letters_) out.push_back(Generator::fromCode(c));
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += Generator::fromCode(letters_[i]).name();
  }
  return out;
}

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Alphabet Alphabet::matrix(int n, bool withDInverse) {
  std::vector<Generator> g;
  if (withDInverse) g.push_back(Generator::dInverse());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) g.push_back(Generator::t(i, j));
  return Alphabet(std::move(g));
}

Alphabet Alphabet::vectors(int n) {
  std::vector<Generator> g;
  for (int i = 1; i <= n; ++i) g.push_back(Generator::x(i));
  return Alphabet(std::move(g));
}

bool Alphabet::contains(const Generator& g) const { return std::binary_search(gens_.begin(), gens_.end(), g); }

bool Alphabet::contains(const Word& w) const {
  for (char32_t c : w.letters())
    if (!contains(Generator::fromCode(c))) return false;
  return true;
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  auto g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Alphabet(std::move(g));
}

}  // namespace qfrt
