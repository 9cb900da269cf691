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

#include "ncalg/ncpoly.hpp"

namespace qfrt {

NCPoly::NCPoly(const Scalar& c) {
  if (!qfrt::isZero(c)) terms_.emplace(Word{}, c);
}

NCPoly::NCPoly(const Word& w, const Scalar& c) {
  if (!qfrt::isZero(c)) terms_.emplace(w, c);
}

bool NCPoly::isHomogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::addTerm(const Word& w, const Scalar& c) {
  if (qfrt::isZero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (qfrt::isZero(it->second)) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) addTerm(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) addTerm(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
  if (qfrt::isZero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.addTerm(wa * wb, ca * cb);
  return r;
}

NCPoly NCPoly::monic() const {
  if (isZero()) return *this;
  Scalar inv = 1 / leadingCoefficient();
  return *this * inv;
}

NCPoly NCPoly::reversed() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.addTerm(w.reversed(), c);
  return r;
}

NCPoly NCPoly::sandwich(const Word& u, const Word& v) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(u * w * v, c);
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Leading term first, the conventional reading order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    const bool neg = sgn(c) < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += toString(mag);
    } else {
      if (mag != 1) out += toString(mag) + " ";
      out += w.str();
    }
  }
  return out;
}

}  // namespace qfrt
