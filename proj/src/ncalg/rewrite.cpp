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

#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace qfrt {

// ---------------------------------------------------------------------------
// LeadIndex

std::uint64_t LeadIndex::hashOf(const Word& w) {
  std::uint64_t h = 0;
  for (char32_t c : w.letters()) h = h * kBase + (static_cast<std::uint64_t>(c) + 1);
  return h;
}

void LeadIndex::insert(const Word& lead, std::uint32_t id) {
  if (lead.empty()) emptyLead_ = id;
  byHash_[hashOf(lead)].push_back(id);
  if (lengthCount_.size() <= lead.size()) lengthCount_.resize(lead.size() + 1, 0);
  ++lengthCount_[lead.size()];
  maxLen_ = std::max(maxLen_, lead.size());
}

void LeadIndex::erase(const Word& lead, std::uint32_t id) {
  auto it = byHash_.find(hashOf(lead));
  if (it == byHash_.end()) return;
  auto& ids = it->second;
  auto pos = std::find(ids.begin(), ids.end(), id);
  if (pos == ids.end()) return;
  ids.erase(pos);
  if (lead.empty()) emptyLead_.reset();
  if (ids.empty()) byHash_.erase(it);
  --lengthCount_[lead.size()];
}

void LeadIndex::clear() {
  byHash_.clear();
  emptyLead_.reset();
  lengthCount_.assign(1, 0);
  maxLen_ = 0;
}

namespace {

/// Full reduction of p. `findRule(word)` returns (lead, tail, position)
/// of some rule whose lead occurs in word, or nothing.
template <class FindRule>
NCPoly reduceWith(const NCPoly& p, FindRule&& findRule) {
  std::map<Word, Scalar, DegLexLess> work(p.terms().begin(), p.terms().end());
  NCPoly result;
  while (!work.empty()) {
    auto last = std::prev(work.end());
    auto hit = findRule(last->first);
    if (!hit) {
      result.addTerm(last->first, last->second);
      work.erase(last);
      continue;
    }
    const auto& [rule, pos] = *hit;
    const Word prefix = last->first.sub(0, pos);
    const Word suffix = last->first.sub(pos + rule->lead.size(), Word::npos());
    const Scalar c = last->second;
    work.erase(last);
    for (const auto& [w, a] : rule->tail) {
      Word nw = prefix * w * suffix;
      auto [it, inserted] = work.try_emplace(std::move(nw), c * a);
      if (!inserted) {
        it->second += c * a;
        if (isZero(it->second)) work.erase(it);
      }
    }
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// RewriteSystem

void RewriteSystem::rebuildIndex() {
  index_.clear();
  for (std::uint32_t i = 0; i < rules_.size(); ++i) index_.insert(rules_[i].lead, i);
}

NCPoly RewriteSystem::reduce(const NCPoly& p) const {
  return reduceWith(p, [this](const Word& w) -> std::optional<std::pair<const Rule*, std::size_t>> {
    auto hit = index_.find(w, [this](std::uint32_t id) -> const Word& { return rules_[id].lead; });
    if (!hit) return std::nullopt;
    return std::make_pair(&rules_[hit->id], hit->pos);
  });
}

NCPoly RewriteSystem::normalForm(const NCPoly& p) const {
  for (const auto& [w, c] : p)
    if (!alphabet_.contains(w)) throw InputError("unknown generator in \"" + w.str() + "\"");
  return reduce(p);
}

bool RewriteSystem::isNormal(const Word& w) const {
  return !index_.find(w, [this](std::uint32_t id) -> const Word& { return rules_[id].lead; });
}

std::vector<Word> RewriteSystem::normalWords(int length) const {
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= length; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& g : alphabet_.generators()) {
        Word nw = w * Word::of(g);
        // Prefix is already normal, so only factors ending at the new letter matter.
        if (isNormal(nw)) next.push_back(std::move(nw));
      }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end(), DegLexLess{});
  return layer;
}

int defaultDegreeBound(const std::vector<NCPoly>& relations) {
  int d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree());
  return 2 * d + 2;
}

// ---------------------------------------------------------------------------
// Completion

class Completion {
 public:
  Completion(const Alphabet& alphabet, int maxDeg) : alphabet_(alphabet), maxDeg_(maxDeg) {}

  void run(const std::vector<NCPoly>& relations) {
    for (const auto& r : relations) {
      if (reduce(r).isZero()) {
        warnings_.push_back("relation " + r.str() + " reduces to zero; dropped");
        continue;
      }
      add(r);
      drainPending();
    }
    while (!queue_.empty()) {
      Pair pr = queue_.top();
      queue_.pop();
      if (!slots_[pr.a] || !slots_[pr.b]) continue;
      add(sPolynomial(pr));
      drainPending();
    }
  }

  RewriteSystem finish() && {
    RewriteSystem rs(alphabet_);
    for (auto& s : slots_)
      if (s) rs.rules_.push_back(std::move(*s));
    std::sort(rs.rules_.begin(), rs.rules_.end(),
              [](const Rule& x, const Rule& y) { return DegLexLess{}(x.lead, y.lead); });
    rs.rebuildIndex();
    rs.converged_ = std::none_of(truncated_.begin(), truncated_.end(),
                                 [this](const Pair& p) { return slots_[p.a] && slots_[p.b]; });
    rs.degreeBound_ = maxDeg_;
    rs.warnings_ = std::move(warnings_);
    return rs;
  }

 private:
  struct Pair {
    int degree;
    std::uint64_t seq;
    std::uint32_t a, b;
    std::uint32_t overlap;
  };
  struct PairAfter {
    bool operator()(const Pair& x, const Pair& y) const {
      return x.degree != y.degree ? x.degree > y.degree : x.seq > y.seq;
    }
  };

  NCPoly reduce(const NCPoly& p) const {
    return reduceWith(p, [this](const Word& w) -> std::optional<std::pair<const Rule*, std::size_t>> {
      auto hit = index_.find(w, [this](std::uint32_t id) -> const Word& { return slots_[id]->lead; });
      if (!hit) return std::nullopt;
      return std::make_pair(&*slots_[hit->id], hit->pos);
    });
  }

  NCPoly sPolynomial(const Pair& pr) const {
    const Rule& ra = *slots_[pr.a];
    const Rule& rb = *slots_[pr.b];
    const Word a = ra.lead.sub(0, ra.lead.size() - pr.overlap);
    const Word b = rb.lead.sub(pr.overlap, Word::npos());
    // (lead_a - tail_a) b - a (lead_b - tail_b); the leads cancel.
    return rb.tail.sandwich(a, Word{}) - ra.tail.sandwich(Word{}, b);
  }

  void drainPending() {
    while (!pending_.empty()) {
      NCPoly p = std::move(pending_.front());
      pending_.pop_front();
      add(p);
    }
  }

  void add(const NCPoly& p) {
    NCPoly r = reduce(p).monic();
    if (r.isZero()) return;
    const Word lead = r.leadingWord();
    NCPoly tail = NCPoly(lead) - r;

    for (std::uint32_t id = 0; id < slots_.size(); ++id) {
      if (!slots_[id] || slots_[id]->lead.find(lead) == Word::npos()) continue;
      pending_.push_back(slots_[id]->polynomial());
      index_.erase(slots_[id]->lead, id);
      slots_[id].reset();
    }

    const auto newId = static_cast<std::uint32_t>(slots_.size());
    slots_.push_back(Rule{lead, std::move(tail)});
    index_.insert(lead, newId);

    for (std::uint32_t id = 0; id < newId; ++id) {
      if (!slots_[id]) continue;
      const auto& t = slots_[id]->tail;
      bool touched = std::any_of(t.begin(), t.end(), [&](const auto& term) { return term.first.find(lead) != Word::npos(); });
      if (touched) slots_[id]->tail = reduce(t);
    }

    for (std::uint32_t id = 0; id <= newId; ++id) {
      if (!slots_[id]) continue;
      enqueueOverlaps(newId, id);
      if (id != newId) enqueueOverlaps(id, newId);
    }
  }

  // Overlaps where a proper suffix of lead(a) equals a proper prefix of lead(b).
  void enqueueOverlaps(std::uint32_t a, std::uint32_t b) {
    const auto& u = slots_[a]->lead.letters();
    const auto& v = slots_[b]->lead.letters();
    if (u.empty() || v.empty()) return;
    const std::size_t maxK = std::min(u.size(), v.size()) - 1;
    for (std::size_t k = 1; k <= maxK; ++k) {
      if (u.compare(u.size() - k, k, v, 0, k) != 0) continue;
      Pair p{static_cast<int>(u.size() + v.size() - k), seq_++, a, b, static_cast<std::uint32_t>(k)};
      if (p.degree > maxDeg_)
        truncated_.push_back(p);
      else
        queue_.push(p);
    }
  }

  Alphabet alphabet_;
  int maxDeg_;
  std::vector<std::optional<Rule>> slots_;
  LeadIndex index_;
  std::priority_queue<Pair, std::vector<Pair>, PairAfter> queue_;
  std::vector<Pair> truncated_;
  std::deque<NCPoly> pending_;
  std::uint64_t seq_ = 0;
  std::vector<std::string> warnings_;
};

RewriteSystem complete(const std::vector<NCPoly>& relations, const Alphabet& alphabet, int maxDeg) {
  int relDeg = 0;
  for (const auto& r : relations) {
    for (const auto& [w, c] : r)
      if (!alphabet.contains(w)) throw InputError("unknown generator in relation \"" + r.str() + "\"");
    relDeg = std::max(relDeg, r.degree());
  }
  if (maxDeg < relDeg)
    throw InputError("degree bound " + std::to_string(maxDeg) + " below relation degree " + std::to_string(relDeg));
  Completion c(alphabet, maxDeg);
  c.run(relations);
  return std::move(c).finish();
}

// ---------------------------------------------------------------------------
// Membership

const char* toString(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Unknown:
      return "unknown";
  }
  return "?";
}

const char* toString(Membership m) {
  switch (m) {
    case Membership::Yes:
      return "yes";
    case Membership::NoDefinitive:
      return "no";
    case Membership::NoUpToBound:
      return "no-up-to-bound";
  }
  return "?";
}

MembershipResult idealContains(const NCPoly& p, const RewriteSystem& rs) {
  NCPoly nf = rs.normalForm(p);
  if (nf.isZero()) return {Membership::Yes, std::move(nf), rs.degreeBound()};
  return {rs.converged() ? Membership::NoDefinitive : Membership::NoUpToBound, std::move(nf), rs.degreeBound()};
}

EqualityResult idealEquals(const std::vector<NCPoly>& first, const RewriteSystem& firstSystem,
                           const std::vector<NCPoly>& second, const RewriteSystem& secondSystem) {
  EqualityResult out;
  out.firstConverged = firstSystem.converged();
  out.secondConverged = secondSystem.converged();
  bool refuted = false;
  bool open = false;
  auto probe = [&](const std::vector<NCPoly>& gens, const RewriteSystem& rs) {
    for (const auto& g : gens) {
      auto m = idealContains(g, rs);
      if (m.verdict == Membership::Yes) continue;
      out.witnesses.push_back(g.str());
      (m.verdict == Membership::NoDefinitive ? refuted : open) = true;
    }
  };
  probe(second, firstSystem);
  probe(first, secondSystem);
  out.answer = refuted ? Answer::No : open ? Answer::Unknown : Answer::Yes;
  return out;
}

EqualityResult idealEquals(const std::vector<NCPoly>& first, const std::vector<NCPoly>& second,
                           const Alphabet& alphabet, int maxDeg) {
  const int bound = maxDeg > 0 ? maxDeg : std::max(defaultDegreeBound(first), defaultDegreeBound(second));
  return idealEquals(first, complete(first, alphabet, bound), second, complete(second, alphabet, bound));
}

bool isConfluent(const RewriteSystem& rs) {
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& u = rules[i].lead;
      const auto& v = rules[j].lead;
      if (i != j && u.find(v) != Word::npos()) return false;
      for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
        if (u.letters().compare(u.size() - k, k, v.letters(), 0, k) != 0) continue;
        const Word a = u.sub(0, u.size() - k);
        const Word b = v.sub(k, Word::npos());
        NCPoly s = rules[j].tail.sandwich(a, Word{}) - rules[i].tail.sandwich(Word{}, b);
        if (!rs.reduce(s).isZero()) return false;
      }
    }
  return true;
}

}  // namespace qfrt
