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

#include "cli/format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qfrt {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  NCPoly parse() {
    NCPoly out;
    skipSpace();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool firstTerm = true;
    while (true) {
      skipSpace();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!firstTerm) {
        fail("expected '+' or '-'");
      }
      firstTerm = false;
      parseTerm(out, sign);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("polynomial \"" + std::string(s_) + "\" at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an index");
    if (pos_ - start > 4) fail("index too large");
    const int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (v < 1 || v > 4095) fail("index out of range");
    return v;
  }

  Generator generator() {
    if (s_.substr(pos_, 4) == "Dinv") {
      pos_ += 4;
      return Generator::dInverse();
    }
    const char head = s_[pos_];
    if ((head != 't' && head != 'x') || pos_ + 1 >= s_.size() || s_[pos_ + 1] != '_') fail("unknown generator");
    pos_ += 2;
    const int row = number();
    if (head == 'x') return Generator::x(row);
    if (pos_ >= s_.size() || s_[pos_] != '^') fail("expected '^'");
    ++pos_;
    return Generator::t(row, number());
  }

  void parseTerm(NCPoly& out, int sign) {
    skipSpace();
    Scalar coeff = sign;
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      try {
        coeff *= parseScalar(s_.substr(start, pos_ - start));
      } catch (const InputError& e) {
        fail(e.what());
      }
      any = true;
    }
    Word w;
    while (true) {
      skipSpace();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skipSpace();
      }
      if (pos_ == s_.size() || s_[pos_] == '+' || s_[pos_] == '-') break;
      w *= Word::of(generator());
      any = true;
    }
    if (!any) fail("empty term");
    out.addTerm(w, coeff);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parsePolynomial(std::string_view text) { return PolyParser(text).parse(); }

std::vector<NCPoly> canonicalRelations(const std::vector<NCPoly>& relations) {
  struct Keyed {
    NCPoly p;
    std::string text;
  };
  std::vector<Keyed> items;
  for (const auto& r : relations) {
    if (r.isZero()) continue;
    NCPoly m = r.monic();
    std::string text = m.str();
    items.push_back({std::move(m), std::move(text)});
  }
  std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) {
    if (a.p.degree() != b.p.degree()) return a.p.degree() < b.p.degree();
    DegLexLess less;
    if (less(a.p.leadingWord(), b.p.leadingWord())) return true;
    if (less(b.p.leadingWord(), a.p.leadingWord())) return false;
    return a.text < b.text;
  });
  items.erase(std::unique(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) { return a.text == b.text; }),
              items.end());
  std::vector<NCPoly> out;
  for (auto& k : items) out.push_back(std::move(k.p));
  return out;
}

std::string serializePresentation(const Presentation& P) {
  const auto rels = canonicalRelations(P.relations);
  std::string out = "qfrt-presentation 1\ndim " + std::to_string(P.dim) + "\ndinv " +
                    (P.withDInverse ? "yes" : "no") + "\nrelations " + std::to_string(rels.size()) + "\n";
  for (const auto& r : rels) out += r.str() + "\n";
  return out;
}

Presentation parsePresentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) throw InputError(std::string("presentation: missing ") + what);
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };
  auto field = [&](const std::string& key) {
    next(key.c_str());
    if (line.rfind(key + " ", 0) != 0) throw InputError("presentation line " + std::to_string(lineNo) + ": expected '" + key + "'");
    return line.substr(key.size() + 1);
  };
  auto integer = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw InputError("presentation line " + std::to_string(lineNo) + ": bad integer '" + s + "'");
    }
  };

  next("header");
  if (line != "qfrt-presentation 1") throw InputError("presentation: unsupported header '" + line + "'");
  Presentation P;
  P.dim = integer(field("dim"));
  const std::string dinv = field("dinv");
  if (dinv != "yes" && dinv != "no") throw InputError("presentation line " + std::to_string(lineNo) + ": dinv must be yes or no");
  P.withDInverse = dinv == "yes";
  const int count = integer(field("relations"));
  const Alphabet alphabet = P.alphabet();
  for (int k = 0; k < count; ++k) {
    next("relation");
    NCPoly r = parsePolynomial(line);
    for (const auto& [w, c] : r)
      if (!alphabet.contains(w))
        throw InputError("presentation line " + std::to_string(lineNo) + ": generator outside the alphabet");
    P.relations.push_back(std::move(r));
  }
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw InputError("presentation line " + std::to_string(lineNo) + ": trailing content");
  }
  return P;
}

}  // namespace qfrt
