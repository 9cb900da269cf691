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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncalg/ncpoly.hpp"

namespace qfrt {

/// Oriented relation lead -> tail, i.e. lead - tail lies in the ideal and
/// every word of tail is smaller than lead.
struct Rule {
  Word lead;
  NCPoly tail;
  NCPoly polynomial() const { return NCPoly(lead) - tail; }
};

/// Hash index over leading words, answering "which lead occurs as a factor
/// of this word" with rolling hashes over every factor of bounded length.
class LeadIndex {
 public:
  void insert(const Word& lead, std::uint32_t id);
  void erase(const Word& lead, std::uint32_t id);
  void clear();

  struct Hit {
    std::uint32_t id;
    std::size_t pos;
  };
  /// Leftmost, then shortest, occurrence of any indexed lead in `w`.
  /// `leadOf(id)` must return the lead registered under id.
  template <class LeadOf>
  std::optional<Hit> find(const Word& w, LeadOf&& leadOf) const {
    if (emptyLead_) return Hit{*emptyLead_, 0};
    const auto& s = w.letters();
    for (std::size_t start = 0; start < s.size(); ++start) {
      std::uint64_t h = 0;
      const std::size_t maxLen = std::min(maxLen_, s.size() - start);
      for (std::size_t len = 1; len <= maxLen; ++len) {
        h = h * kBase + (static_cast<std::uint64_t>(s[start + len - 1]) + 1);
        if (lengthCount_[len] == 0) continue;
        auto it = byHash_.find(h);
        if (it == byHash_.end()) continue;
        for (std::uint32_t id : it->second) {
          const Word& lead = leadOf(id);
          if (lead.size() == len && s.compare(start, len, lead.letters()) == 0) return Hit{id, start};
        }
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ull;
  static std::uint64_t hashOf(const Word& w);

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> byHash_;
  std::vector<std::uint32_t> lengthCount_ = std::vector<std::uint32_t>(1, 0);
  std::size_t maxLen_ = 0;
  std::optional<std::uint32_t> emptyLead_;  // the unit lies in the ideal
};

/// Inter-reduced rewrite system for a two-sided ideal of the free algebra
/// under degree-lex order. `converged()` is true only when every overlap
/// between leading words was resolved, i.e. the system is confluent and
/// normal forms decide ideal membership.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool converged() const { return converged_; }
  int degreeBound() const { return degreeBound_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Fully reduced representative. Throws InputError on letters outside
  /// the alphabet.
  NCPoly normalForm(const NCPoly& p) const;
  /// Same, without the alphabet check (internal hot path).
  NCPoly reduce(const NCPoly& p) const;
  bool isNormal(const Word& w) const;
  /// All normal words of exactly the given length, in degree-lex order.
  std::vector<Word> normalWords(int length) const;

 private:
  friend class Completion;
  void rebuildIndex();

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  LeadIndex index_;
  bool converged_ = true;
  int degreeBound_ = 0;
  std::vector<std::string> warnings_;
};

/// 2 * (max relation degree) + 2.
int defaultDegreeBound(const std::vector<NCPoly>& relations);

/// Buchberger/Mora completion. S-polynomials are processed in FIFO order
/// keyed by (overlap degree, creation order); overlaps longer than maxDeg
/// are skipped and clear the convergence flag if both rules survive.
/// Relations reducing to zero are dropped with a warning.
RewriteSystem complete(const std::vector<NCPoly>& relations, const Alphabet& alphabet, int maxDeg);

enum class Membership { Yes, NoDefinitive, NoUpToBound };

struct MembershipResult {
  Membership verdict;
  NCPoly normalForm;
  int bound = 0;  // degree bound of the system, meaningful for NoUpToBound
};

MembershipResult idealContains(const NCPoly& p, const RewriteSystem& rs);

/// Three-valued answer for questions that are only semidecidable.
enum class Answer { Yes, No, Unknown };
const char* toString(Answer a);
const char* toString(Membership m);

struct EqualityResult {
  Answer answer = Answer::Unknown;
  bool firstConverged = false;
  bool secondConverged = false;
  /// Generators of one side whose membership in the other was not
  /// certified, rendered as text.
  std::vector<std::string> witnesses;
};

/// Mutual containment of generators. Reduction to zero is a certificate
/// even for truncated systems; a refutation requires a converged system.
/// maxDeg <= 0 selects the larger default bound of the two sides.
EqualityResult idealEquals(const std::vector<NCPoly>& first, const std::vector<NCPoly>& second,
                           const Alphabet& alphabet, int maxDeg);
EqualityResult idealEquals(const std::vector<NCPoly>& first, const RewriteSystem& firstSystem,
                           const std::vector<NCPoly>& second, const RewriteSystem& secondSystem);

/// Independent diamond-lemma check: every overlap of every pair of rules
/// reduces to zero and no lead divides another. Used as a test oracle.
bool isConfluent(const RewriteSystem& rs);

}  // namespace qfrt
