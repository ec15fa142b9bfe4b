#pragma once

// Shared test utilities. The reference implementations here are kept
// deliberately independent of the library's computation paths: they
// enumerate, sort and count directly so that library results can be
// checked against them.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rankmerge/epistemic.hpp"
#include "rankmerge/formula.hpp"
#include "rankmerge/operators.hpp"
#include "rankmerge/parser.hpp"
#include "rankmerge/sequences.hpp"
#include "rankmerge/vocabulary.hpp"

namespace testutil {

using namespace rankmerge;

inline Vocabulary pq() { return Vocabulary({"p", "q"}); }

inline Interpretation at(const Vocabulary& v, const std::string& bits) {
  return v.interpretation_from_bits(bits);
}

inline EpistemicState state_of(const Vocabulary& v,
                               std::vector<Rank> ranks_by_bits,
                               const std::vector<std::string>& order) {
  // Ranks given in display order; reorder into index order.
  std::vector<Rank> ranks(v.interpretation_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    ranks[at(v, order[i]).index()] = ranks_by_bits[i];
  }
  return EpistemicState(v, std::move(ranks));
}

// The stock pair of states: distances to p&q and to ~p&~q.
inline EpistemicList stock_list() {
  const Vocabulary v = pq();
  return EpistemicList({state_from_kb(parse("p & q", v)),
                        state_from_kb(parse("~p & ~q", v))});
}

// --- naive truth-table evaluation, independent of Formula::evaluate ---

inline bool naive_eval(const Formula& f, Interpretation u) {
  switch (f.connective()) {
    case Connective::kTrue:
      return true;
    case Connective::kFalse:
      return false;
    case Connective::kAtom:
      return f.vocab().truth(u, f.atom_index());
    case Connective::kNot:
      return !naive_eval(f.operand(), u);
    case Connective::kAnd:
      return naive_eval(f.lhs(), u) && naive_eval(f.rhs(), u);
    case Connective::kOr:
      return naive_eval(f.lhs(), u) || naive_eval(f.rhs(), u);
    case Connective::kImplies:
      return naive_eval(f.lhs(), u) ? naive_eval(f.rhs(), u) : true;
    case Connective::kIff:
      return naive_eval(f.lhs(), u) == naive_eval(f.rhs(), u);
  }
  return false;
}

inline Formula random_formula(std::mt19937& rng, const Vocabulary& v,
                              int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0:
      return Formula::atom(
          v, std::uniform_int_distribution<std::size_t>(
                 0, v.atom_count() - 1)(rng));
    case 1:
      return Formula::constant(v, std::uniform_int_distribution<int>(
                                      0, 1)(rng) == 0);
    case 2:
      return Formula::negation(random_formula(rng, v, depth - 1));
    case 3:
      return Formula::conjunction(random_formula(rng, v, depth - 1),
                                  random_formula(rng, v, depth - 1));
    case 4:
      return Formula::disjunction(random_formula(rng, v, depth - 1),
                                  random_formula(rng, v, depth - 1));
    case 5:
      return Formula::implication(random_formula(rng, v, depth - 1),
                                  random_formula(rng, v, depth - 1));
    default:
      return Formula::biconditional(random_formula(rng, v, depth - 1),
                                    random_formula(rng, v, depth - 1));
  }
}

// --- reference sequence machinery ---

inline Rank naive_d(const RankSequence& s) {
  Rank total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      total += s[i] > s[j] ? s[i] - s[j] : s[j] - s[i];
    }
  }
  return total;
}

inline Rank naive_sum(const RankSequence& s) {
  Rank total = 0;
  for (Rank x : s) total += x;
  return total;
}

inline void naive_enumerate(SpaceKind kind, std::size_t length, Rank bound,
                            RankSequence& prefix,
                            std::vector<RankSequence>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (Rank v = 0; v <= bound; ++v) {
    if (!prefix.empty()) {
      if (kind == SpaceKind::kNonDecreasing && v < prefix.back()) continue;
      if (kind == SpaceKind::kNonIncreasing && v > prefix.back()) continue;
    }
    prefix.push_back(v);
    naive_enumerate(kind, length, bound, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<RankSequence> naive_space(SpaceKind kind,
                                             std::size_t length, Rank bound) {
  std::vector<RankSequence> out;
  RankSequence prefix;
  naive_enumerate(kind, length, bound, prefix, out);
  return out;
}

inline std::vector<Rank> naive_key(OrderKind order, const RankSequence& s) {
  switch (order) {
    case OrderKind::kLex:
      return s;
    case OrderKind::kDisagreement:
      return {naive_d(s)};
    case OrderKind::kDisagreementThenLex: {
      std::vector<Rank> k{naive_d(s)};
      k.insert(k.end(), s.begin(), s.end());
      return k;
    }
    case OrderKind::kSumThenDisagreement:
      return {naive_sum(s), naive_d(s)};
  }
  return {};
}

// Dense rank by scanning the whole space and counting distinct keys that
// compare strictly below.
inline Rank naive_omega(SpaceKind kind, std::size_t length, Rank bound,
                        OrderKind order, const RankSequence& s) {
  const std::vector<Rank> target = naive_key(order, s);
  std::set<std::vector<Rank>> below;
  for (const RankSequence& t : naive_space(kind, length, bound)) {
    std::vector<Rank> k = naive_key(order, t);
    if (k < target) below.insert(std::move(k));
  }
  return static_cast<Rank>(below.size());
}

// --- reference merge ---

inline std::vector<Rank> oracle_pre_ranks(OperatorId op,
                                          const EpistemicList& E) {
  const std::size_t n = E.vocab().interpretation_count();
  Rank bound = 0;
  for (const EpistemicState& s : E.states()) {
    bound = std::max(bound, *std::max_element(s.ranks().begin(),
                                              s.ranks().end()));
  }
  std::vector<Rank> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Interpretation u(static_cast<std::uint32_t>(i));
    RankSequence seq;
    for (const EpistemicState& s : E.states()) seq.push_back(s.rank(u));
    RankSequence up = seq;
    std::sort(up.begin(), up.end());
    RankSequence down = up;
    std::reverse(down.begin(), down.end());
    switch (op) {
      case OperatorId::kLs: {
        const bool agree =
            std::all_of(seq.begin(), seq.end(),
                        [&](Rank v) { return v == seq.front(); });
        out[i] = 2 * up.front() + (agree ? 0 : 1);
        break;
      }
      case OperatorId::kMax:
        out[i] = down.front();
        break;
      case OperatorId::kSigma:
        out[i] = naive_sum(seq);
        break;
      case OperatorId::kRls:
        out[i] = naive_omega(SpaceKind::kNonDecreasing, seq.size(), bound,
                             OrderKind::kLex, up);
        break;
      case OperatorId::kGmax:
        out[i] = naive_omega(SpaceKind::kNonIncreasing, seq.size(), bound,
                             OrderKind::kLex, down);
        break;
      case OperatorId::kLex:
        out[i] = naive_omega(SpaceKind::kAll, seq.size(), bound,
                             OrderKind::kLex, seq);
        break;
      case OperatorId::kCons:
        out[i] = naive_omega(SpaceKind::kAll, seq.size(), bound,
                             OrderKind::kDisagreement, seq);
        break;
      case OperatorId::kRcons:
        out[i] = naive_omega(SpaceKind::kNonDecreasing, seq.size(), bound,
                             OrderKind::kDisagreementThenLex, up);
        break;
      case OperatorId::kRsigma:
        out[i] = naive_omega(SpaceKind::kAll, seq.size(), bound,
                             OrderKind::kSumThenDisagreement, seq);
        break;
    }
  }
  return out;
}

inline EpistemicState oracle_merge(OperatorId op, const EpistemicList& E) {
  std::vector<Rank> pre = oracle_pre_ranks(op, E);
  const Rank low = *std::min_element(pre.begin(), pre.end());
  for (Rank& r : pre) r -= low;
  return EpistemicState(E.vocab(), std::move(pre));
}

// All rank functions over the vocabulary with ranks up to max_rank.
inline std::vector<EpistemicState> all_states(const Vocabulary& v,
                                              Rank max_rank) {
  const std::size_t n = v.interpretation_count();
  std::vector<EpistemicState> out;
  std::vector<Rank> ranks(n, 0);
  while (true) {
    out.emplace_back(v, ranks);
    std::size_t i = 0;
    while (i < n && ranks[i] == max_rank) ranks[i++] = 0;
    if (i == n) break;
    ++ranks[i];
  }
  return out;
}

}  // namespace testutil
