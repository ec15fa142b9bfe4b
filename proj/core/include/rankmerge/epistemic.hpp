#pragma once

#include <cstdint>
#include <vector>

#include "rankmerge/formula.hpp"
#include "rankmerge/model_set.hpp"
#include "rankmerge/vocabulary.hpp"

namespace rankmerge {

/// Plausibility rank of an interpretation; 0 is most plausible. All rank
/// arithmetic in the library is checked: overflow raises RankOverflowError
/// instead of wrapping.
using Rank = std::uint64_t;

Rank checked_add(Rank a, Rank b);
Rank checked_mul(Rank a, Rank b);

/// A total map from interpretations to ranks. Immutable value type.
class EpistemicState {
 public:
  /// ranks[i] is the rank of the interpretation with index i; the vector
  /// must cover the whole universe.
  EpistemicState(Vocabulary vocab, std::vector<Rank> ranks);

  const Vocabulary& vocab() const { return vocab_; }
  Rank rank(Interpretation u) const { return ranks_[u.index()]; }
  const std::vector<Rank>& ranks() const { return ranks_; }

  Rank min_rank() const;
  Rank max_rank() const;

  /// Uniform subtraction of the minimum rank; the result has minimum 0.
  EpistemicState normalized() const;

  bool operator==(const EpistemicState& other) const = default;

 private:
  Vocabulary vocab_;
  std::vector<Rank> ranks_;
};

/// Pointwise equality. Unlike operator==, a vocabulary mismatch is an
/// error rather than a negative answer.
bool states_equal(const EpistemicState& a, const EpistemicState& b);

EpistemicState normalize(const EpistemicState& s);

/// The knowledge base associated with a state: its models are exactly the
/// rank-0 interpretations, and the formula is the canonical minterm DNF
/// of that model set.
struct KnowledgeBaseView {
  ModelSet model_set;
  Formula canonical_formula;
};

KnowledgeBaseView knowledge_base(const EpistemicState& s);

/// Lifts a consistent knowledge base to an epistemic state by ranking
/// every interpretation with its distance to the nearest model. The
/// associated knowledge base of the result is equivalent to f.
EpistemicState state_from_kb(const Formula& f);

/// An ordered, non-empty list of epistemic states over one vocabulary —
/// the input of every merging operation.
class EpistemicList {
 public:
  explicit EpistemicList(std::vector<EpistemicState> states);

  std::size_t size() const { return states_.size(); }
  const EpistemicState& state(std::size_t i) const { return states_.at(i); }
  const std::vector<EpistemicState>& states() const { return states_; }
  const Vocabulary& vocab() const { return states_.front().vocab(); }

  /// max(E): the largest rank any member state assigns anywhere.
  Rank max_rank() const;

  /// Concatenation.
  EpistemicList concat(const EpistemicList& other) const;
  /// Concatenation with n copies of one state appended.
  EpistemicList append_copies(const EpistemicState& s, std::size_t n) const;

  bool operator==(const EpistemicList& other) const = default;

 private:
  std::vector<EpistemicState> states_;
};

}  // namespace rankmerge
