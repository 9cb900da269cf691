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

#include "bialgebra/map_tensor.hpp"

namespace qfrt {

std::vector<MultiIndex> allMultiIndices(int n, int length) {
  std::vector<MultiIndex> out;
  if (n <= 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  MultiIndex cur(length, 1);
  while (true) {
    out.push_back(cur);
    int pos = length - 1;
    while (pos >= 0 && cur[pos] == n) cur[pos--] = 1;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

std::string toString(const MultiIndex& I) {
  std::string s = "(";
  for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
  return s + ")";
}

MapTensor::MapTensor(int dim, int inPower, int outPower, std::string name)
    : dim_(dim), inPower_(inPower), outPower_(outPower), name_(std::move(name)) {
  if (dim < 0 || inPower < 0 || outPower < 0) throw InputError("map dimensions must be non-negative");
}

MapTensor MapTensor::identity(int dim, int power) {
  MapTensor id(dim, power, power, "id");
  for (const auto& I : allMultiIndices(dim, power)) id.add(I, I, 1);
  return id;
}

void MapTensor::add(const MultiIndex& in, const MultiIndex& out, const Scalar& c) {
  if (static_cast<int>(in.size()) != inPower_ || static_cast<int>(out.size()) != outPower_)
    throw InputError("multi-index length mismatch for map " + name_);
  for (int v : in)
    if (v < 1 || v > dim_) throw InputError("input index " + std::to_string(v) + " out of range 1.." + std::to_string(dim_));
  for (int v : out)
    if (v < 1 || v > dim_) throw InputError("output index " + std::to_string(v) + " out of range 1.." + std::to_string(dim_));
  if (qfrt::isZero(c)) return;
  auto& row = rows_[in];
  auto [it, inserted] = row.try_emplace(out, c);
  if (!inserted) {
    it->second += c;
    if (qfrt::isZero(it->second)) row.erase(it);
  }
  if (row.empty()) rows_.erase(in);
}

Scalar MapTensor::at(const MultiIndex& in, const MultiIndex& out) const {
  auto r = rows_.find(in);
  if (r == rows_.end()) return 0;
  auto it = r->second.find(out);
  return it == r->second.end() ? Scalar(0) : it->second;
}

const MapTensor::Row& MapTensor::image(const MultiIndex& in) const {
  static const Row empty;
  auto r = rows_.find(in);
  return r == rows_.end() ? empty : r->second;
}

MapTensor MapTensor::compose(const MapTensor& g) const {
  if (g.outPower_ != inPower_ || g.dim_ != dim_) throw InputError("incompatible maps in composition");
  MapTensor r(dim_, g.inPower_, outPower_);
  for (const auto& [I, row] : g.rows_)
    for (const auto& [J, c] : row)
      for (const auto& [K, d] : image(J)) r.add(I, K, c * d);
  return r;
}

MapTensor MapTensor::tensor(const MapTensor& h) const {
  if (h.dim_ != dim_) throw InputError("dimension mismatch in tensor product of maps");
  MapTensor r(dim_, inPower_ + h.inPower_, outPower_ + h.outPower_);
  for (const auto& [I1, row1] : rows_)
    for (const auto& [I2, row2] : h.rows_) {
      MultiIndex I = I1;
      I.insert(I.end(), I2.begin(), I2.end());
      for (const auto& [J1, c1] : row1)
        for (const auto& [J2, c2] : row2) {
          MultiIndex J = J1;
          J.insert(J.end(), J2.begin(), J2.end());
          r.add(I, J, c1 * c2);
        }
    }
  return r;
}

}  // namespace qfrt
