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

#include "cli/document.hpp"

#include <set>

#include "cli/format.hpp"

namespace qfrt {

bool Node::has(const char* key) const { return j_->is_object() && j_->contains(key); }

Node Node::at(const char* key) const {
  if (!j_->is_object()) fail("expected an object");
  auto it = j_->find(key);
  if (it == j_->end()) fail(std::string("missing field \"") + key + "\"");
  return Node(*it, path_ + "." + key);
}

void Node::expectArray() const {
  if (!j_->is_array()) fail("expected an array");
}

Node Node::at(std::size_t index) const {
  expectArray();
  if (index >= j_->size()) fail("index " + std::to_string(index) + " out of range");
  return Node((*j_)[index], path_ + "[" + std::to_string(index) + "]");
}

std::size_t Node::size() const {
  expectArray();
  return j_->size();
}

void Node::fail(const std::string& reason) const { throw SchemaError(path_, reason); }

int Node::integer(int lo, int hi) const {
  if (!j_->is_number_integer()) fail("expected an integer");
  const auto v = j_->get<long long>();
  if (v < lo || v > hi) fail("value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(v);
}

std::string Node::string() const {
  if (!j_->is_string()) fail("expected a string");
  return j_->get<std::string>();
}

bool Node::boolean() const {
  if (!j_->is_boolean()) fail("expected true or false");
  return j_->get<bool>();
}

Scalar Node::scalar() const {
  if (j_->is_number_integer()) return Scalar(j_->get<long>());
  if (!j_->is_string()) fail("expected a rational as a string \"p\" or \"p/q\"");
  try {
    return parseScalar(j_->get<std::string>());
  } catch (const InputError& e) {
    fail(e.what());
  }
}

NCPoly Node::polynomial() const {
  try {
    return parsePolynomial(string());
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    fail(e.what());
  }
}

namespace {

const std::set<std::string>& knownKinds() {
  static const std::set<std::string> kinds{"braiding", "map_family", "bilinear_form", "graded_algebra", "quiver", "pipeline"};
  return kinds;
}

constexpr int kMaxDim = 64;

MultiIndex readIndex(const Node& n, int dim, int length) {
  if (static_cast<int>(n.size()) != length)
    n.fail("expected " + std::to_string(length) + " indices, got " + std::to_string(n.size()));
  MultiIndex I;
  for (int k = 0; k < length; ++k) I.push_back(n.at(k).integer(1, dim));
  return I;
}

void readEntries(const Node& entries, MapTensor& f) {
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const Node entry = entries.at(e);
    const MultiIndex in = readIndex(entry.at("in"), f.dim(), f.inPower());
    const MultiIndex out = readIndex(entry.at("out"), f.dim(), f.outPower());
    f.add(in, out, entry.at("coeff").scalar());
  }
}

}  // namespace

Document parseDocument(std::string_view bytes) {
  Document d;
  try {
    d.root = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  const Node root = d.node();
  if (!d.root.is_object()) root.fail("expected an object");
  d.kind = root.at("kind").string();
  if (!knownKinds().count(d.kind)) root.at("kind").fail("unknown kind \"" + d.kind + "\"");
  if (root.has("options")) {
    const Node opts = root.at("options");
    if (!opts.json().is_object()) opts.fail("expected an object");
    if (opts.has("max_deg")) d.maxDeg = opts.at("max_deg").integer(1, 64);
  }
  return d;
}

MapTensor readBraidingMap(const Node& n) {
  if (n.has("diagonal")) {
    const Matrix q = readMatrix(n.at("diagonal"), n.has("dim") ? n.at("dim").integer(1, kMaxDim) : -1);
    const int dim = static_cast<int>(q.rows());
    MapTensor c(dim, 2, 2, "c");
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) c.add({i, j}, {j, i}, q(i - 1, j - 1));
    return c;
  }
  const int dim = n.at("dim").integer(1, kMaxDim);
  if (n.has("preset")) {
    const Node p = n.at("preset");
    const std::string name = p.string();
    if (name == "identity") return MapTensor::identity(dim, 2);
    MapTensor c(dim, 2, 2, "c");
    Scalar sign;
    if (name == "flip")
      sign = 1;
    else if (name == "minus_flip")
      sign = -1;
    else
      p.fail("unknown preset \"" + name + "\" (expected identity, flip or minus_flip)");
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) c.add({i, j}, {j, i}, sign);
    return c;
  }
  MapTensor c(dim, 2, 2, "c");
  readEntries(n.at("entries"), c);
  return c;
}

MapTensor readMap(const Node& n, int dim) {
  const std::string name = n.has("name") ? n.at("name").string() : std::string{};
  MapTensor f(dim, n.at("in_power").integer(0, 8), n.at("out_power").integer(0, 8), name);
  readEntries(n.at("entries"), f);
  return f;
}

std::vector<MapTensor> readMaps(const Node& n, int dim) {
  std::vector<MapTensor> out;
  for (std::size_t k = 0; k < n.size(); ++k) out.push_back(readMap(n.at(k), dim));
  return out;
}

Matrix readMatrix(const Node& n, int expected) {
  const std::size_t rows = n.size();
  if (rows == 0) n.fail("matrix is empty");
  if (expected >= 0 && static_cast<int>(rows) != expected)
    n.fail("expected " + std::to_string(expected) + " rows, got " + std::to_string(rows));
  Matrix m(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = n.at(i);
    if (row.size() != rows) row.fail("expected " + std::to_string(rows) + " entries, got " + std::to_string(row.size()));
    for (std::size_t j = 0; j < rows; ++j) m(i, j) = row.at(j).scalar();
  }
  return m;
}

GradedAlgebra readAlgebra(const Node& n) {
  GradedAlgebra B;
  B.dim = n.at("dim").integer(1, kMaxDim);
  const Node rels = n.at("relations");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const Node r = rels.at(k);
    NCPoly p;
    if (r.json().is_string()) {
      p = r.polynomial();
    } else {
      for (std::size_t m = 0; m < r.size(); ++m) {
        const Node term = r.at(m);
        Word w;
        const Node word = term.at("word");
        for (std::size_t l = 0; l < word.size(); ++l) w *= Word::of(Generator::x(word.at(l).integer(1, B.dim)));
        p.addTerm(w, term.at("coeff").scalar());
      }
    }
    for (const auto& [w, c] : p)
      for (const auto& g : w.generators())
        if (g.kind != GenKind::X || g.row > B.dim) r.fail("generator " + g.name() + " outside x_1..x_" + std::to_string(B.dim));
    B.relations.push_back(std::move(p));
  }
  return B;
}

Quiver readQuiver(const Node& n) {
  Quiver q;
  q.vertexCount = n.at("vertices").integer(1, 64);
  const Node arrows = n.at("arrows");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const Node a = arrows.at(k);
    q.arrows.push_back({a.at("source").integer(1, q.vertexCount), a.at("target").integer(1, q.vertexCount)});
  }
  return q;
}

AntipodeCandidate readAntipode(const Node& n, int dim) {
  AntipodeCandidate S;
  S.dim = dim;
  const Node t = n.at("t");
  if (static_cast<int>(t.size()) != dim) t.fail("expected " + std::to_string(dim) + " rows");
  const Alphabet alphabet = Alphabet::matrix(dim, true);
  auto checked = [&](const Node& cell) {
    NCPoly p = cell.polynomial();
    for (const auto& [w, c] : p)
      if (!alphabet.contains(w)) cell.fail("generator outside t_i^j and Dinv");
    return p;
  };
  for (int i = 0; i < dim; ++i) {
    const Node row = t.at(i);
    if (static_cast<int>(row.size()) != dim) row.fail("expected " + std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j) S.t.push_back(checked(row.at(j)));
  }
  S.dInverse = checked(n.at("dinv"));
  return S;
}

std::vector<NCPoly> readRelationList(std::string_view bytes) {
  const auto first = bytes.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("expected relations: empty input");
  if (bytes[first] != '{') return parsePresentation(bytes).relations;
  Json j;
  try {
    j = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  const Node root(j, "$");
  const Node rels = root.at("relations");
  std::vector<NCPoly> out;
  for (std::size_t k = 0; k < rels.size(); ++k) out.push_back(rels.at(k).polynomial());
  return out;
}

}  // namespace qfrt
