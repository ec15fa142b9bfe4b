#include "rankmerge/epistemic.hpp"

#include <algorithm>
#include <limits>

#include "rankmerge/errors.hpp"

namespace rankmerge {

Rank checked_add(Rank a, Rank b) {
  if (a > std::numeric_limits<Rank>::max() - b) {
    throw RankOverflowError("rank addition overflowed");
  }
  return a + b;
}

Rank checked_mul(Rank a, Rank b) {
  if (b != 0 && a > std::numeric_limits<Rank>::max() / b) {
    throw RankOverflowError("rank multiplication overflowed");
  }
  return a * b;
}

EpistemicState::EpistemicState(Vocabulary vocab, std::vector<Rank> ranks)
    : vocab_(std::move(vocab)), ranks_(std::move(ranks)) {
  if (ranks_.size() != vocab_.interpretation_count()) {
    throw Error("state must rank all " +
                std::to_string(vocab_.interpretation_count()) +
                " interpretations, got " + std::to_string(ranks_.size()));
  }
}

Rank EpistemicState::min_rank() const {
  return *std::min_element(ranks_.begin(), ranks_.end());
}

Rank EpistemicState::max_rank() const {
  return *std::max_element(ranks_.begin(), ranks_.end());
}

EpistemicState EpistemicState::normalized() const {
  const Rank low = min_rank();
  if (low == 0) return *this;
  std::vector<Rank> shifted(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) shifted[i] = ranks_[i] - low;
  return EpistemicState(vocab_, std::move(shifted));
}

bool states_equal(const EpistemicState& a, const EpistemicState& b) {
  if (!(a.vocab() == b.vocab())) {
    throw VocabularyMismatchError(
        "comparing states over different vocabularies");
  }
  return a.ranks() == b.ranks();
}

EpistemicState normalize(const EpistemicState& s) { return s.normalized(); }

KnowledgeBaseView knowledge_base(const EpistemicState& s) {
  ModelSet zero_ranked(s.vocab().interpretation_count());
  for (std::size_t i = 0; i < s.ranks().size(); ++i) {
    if (s.ranks()[i] == 0) {
      zero_ranked.insert(Interpretation(static_cast<std::uint32_t>(i)));
    }
  }
  Formula formula = canonical_dnf(zero_ranked, s.vocab());
  return KnowledgeBaseView{std::move(zero_ranked), std::move(formula)};
}

EpistemicState state_from_kb(const Formula& f) {
  const Vocabulary& vocab = f.vocab();
  const ModelSet m = models(f);
  if (m.empty()) {
    throw InconsistentKbError(
        "cannot build a state from an inconsistent knowledge base");
  }
  // Single sweep over models keeps this linear in |U|^2 worst case, which
  // is all the tiny universes here need.
  std::vector<Rank> ranks(vocab.interpretation_count(), 0);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    Interpretation u(static_cast<std::uint32_t>(i));
    unsigned best = std::numeric_limits<unsigned>::max();
    for (Interpretation v : m.interpretations()) {
      best = std::min(best, dist(u, v));
    }
    ranks[i] = best;
  }
  return EpistemicState(vocab, std::move(ranks));
}

EpistemicList::EpistemicList(std::vector<EpistemicState> states)
    : states_(std::move(states)) {
  if (states_.empty()) {
    throw EmptyListError("epistemic lists must be non-empty");
  }
  for (const EpistemicState& s : states_) {
    if (!(s.vocab() == states_.front().vocab())) {
      throw VocabularyMismatchError(
          "all states in a list must share one vocabulary");
    }
  }
}

Rank EpistemicList::max_rank() const {
  Rank out = 0;
  for (const EpistemicState& s : states_) out = std::max(out, s.max_rank());
  return out;
}

EpistemicList EpistemicList::concat(const EpistemicList& other) const {
  std::vector<EpistemicState> all = states_;
  all.insert(all.end(), other.states_.begin(), other.states_.end());
  return EpistemicList(std::move(all));
}

EpistemicList EpistemicList::append_copies(const EpistemicState& s,
                                           std::size_t n) const {
  std::vector<EpistemicState> all = states_;
  for (std::size_t i = 0; i < n; ++i) all.push_back(s);
  return EpistemicList(std::move(all));
}

}  // namespace rankmerge
