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

#include <string>
#include <string_view>

#include "bialgebra/presentation.hpp"

namespace qfrt {

/// Parses the text syntax produced by NCPoly::str, e.g.
/// "-2/3 t_1^2 t_2^1 + t_1^1 - 1". Factors may be separated by spaces or
/// '*'. Throws InputError with the offending column.
NCPoly parsePolynomial(std::string_view text);

/// Relations made monic, zero and duplicate relations dropped, sorted by
/// (degree, leading word, text).
std::vector<NCPoly> canonicalRelations(const std::vector<NCPoly>& relations);

/// Canonical text form:
///   qfrt-presentation 1
///   dim <n>
///   dinv <yes|no>
///   relations <count>
///   <one relation per line>
std::string serializePresentation(const Presentation& P);
Presentation parsePresentation(std::string_view text);

}  // namespace qfrt
