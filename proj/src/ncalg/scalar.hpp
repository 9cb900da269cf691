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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfrt {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Malformed user input (bad document, unknown generator, index out of
/// range). Maps to exit code 64 at the CLI boundary.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (singular matrix, non-braiding, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A question that could not be settled within the degree bound.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Rejects zero denominators, decimals and
/// surrounding garbage.
Scalar parseScalar(std::string_view text);

std::string toString(const Scalar& s);

inline bool isZero(const Scalar& s) { return sgn(s) == 0; }
inline bool isOne(const Scalar& s) { return s == 1; }

}  // namespace qfrt
