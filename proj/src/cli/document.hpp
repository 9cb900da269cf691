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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bialgebra/universal.hpp"
#include "envelope/envelope.hpp"
#include "json.hpp"

namespace qfrt {

using Json = nlohmann::json;

/// Malformed document; the message starts with a JSON path such as
/// "$.entries[3].in[1]".
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& reason) : InputError(path + ": " + reason) {}
};

/// Read-only view of a JSON value together with its path.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const Json& json() const { return *j_; }
  bool has(const char* key) const;
  Node at(const char* key) const;
  Node at(std::size_t index) const;
  std::size_t size() const;  // arrays only

  int integer(int lo, int hi) const;
  std::string string() const;
  bool boolean() const;
  Scalar scalar() const;
  NCPoly polynomial() const;
  [[noreturn]] void fail(const std::string& reason) const;

 private:
  void expectArray() const;
  const Json* j_;
  std::string path_;
};

struct Document {
  std::string kind;
  Json root;
  std::optional<int> maxDeg;  // options.max_deg
  Node node() const { return Node(root, "$"); }
};

/// Parses JSON and validates "kind" and "options". Throws SchemaError.
Document parseDocument(std::string_view bytes);

/// {"dim", "entries" | "diagonal" | "preset"}; the map is not yet checked
/// against the braid equation.
MapTensor readBraidingMap(const Node& n);
/// {"name", "in_power", "out_power", "entries": [{"in", "out", "coeff"}]}.
MapTensor readMap(const Node& n, int dim);
std::vector<MapTensor> readMaps(const Node& n, int dim);
/// Square matrix of scalars; `expected` < 0 accepts any size.
Matrix readMatrix(const Node& n, int expected = -1);
/// {"dim", "relations": [text | [{"word": [..], "coeff"}]]}.
GradedAlgebra readAlgebra(const Node& n);
/// {"vertices", "arrows": [{"source", "target"}]}.
Quiver readQuiver(const Node& n);
/// {"t": n x n array of polynomial strings, "dinv": polynomial string}.
AntipodeCandidate readAntipode(const Node& n, int dim);

/// Relation list for --expect: a JSON document with "relations" (strings)
/// or the canonical presentation text.
std::vector<NCPoly> readRelationList(std::string_view bytes);

}  // namespace qfrt
