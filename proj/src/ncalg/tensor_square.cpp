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

#include "ncalg/tensor_square.hpp"

#include <unordered_map>

namespace qfrt {

TensorSquare TensorSquare::pure(const NCPoly& left, const NCPoly& right) {
  TensorSquare t;
  for (const auto& [wl, cl] : left)
    for (const auto& [wr, cr] : right) t.addTerm(wl, wr, cl * cr);
  return t;
}

void TensorSquare::addTerm(const Word& l, const Word& r, const Scalar& c) {
  if (qfrt::isZero(c)) return;
  auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (qfrt::isZero(it->second)) terms_.erase(it);
  }
}

TensorSquare& TensorSquare::operator+=(const TensorSquare& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, c);
  return *this;
}

TensorSquare& TensorSquare::operator-=(const TensorSquare& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, -c);
  return *this;
}

TensorSquare& TensorSquare::operator*=(const Scalar& s) {
  if (qfrt::isZero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

TensorSquare operator*(const TensorSquare& a, const TensorSquare& b) {
  TensorSquare r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.addTerm(ka.first * kb.first, ka.second * kb.second, ca * cb);
  return r;
}

TensorSquare TensorSquare::reduced(const RewriteSystem& left, const RewriteSystem& right) const {
  std::unordered_map<Word, NCPoly, WordHash> leftCache, rightCache;
  auto nf = [](std::unordered_map<Word, NCPoly, WordHash>& cache, const RewriteSystem& rs,
               const Word& w) -> const NCPoly& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, rs.normalForm(NCPoly(w))).first;
    return it->second;
  };
  TensorSquare out;
  for (const auto& [k, c] : terms_) {
    const NCPoly& l = nf(leftCache, left, k.first);
    if (l.isZero()) continue;
    const NCPoly& r = nf(rightCache, right, k.second);
    for (const auto& [wl, cl] : l)
      for (const auto& [wr, cr] : r) out.addTerm(wl, wr, c * cl * cr);
  }
  return out;
}

std::string TensorSquare::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + toString(c) + ") " + k.first.str() + " (x) " + k.second.str();
  }
  return out;
}

}  // namespace qfrt
