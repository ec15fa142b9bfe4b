#include "rankmerge/infobase.hpp"

#include "rankmerge/errors.hpp"
#include "rankmerge/operators.hpp"

namespace rankmerge {

Infobase::Infobase(Vocabulary vocab, std::vector<Formula> wffs)
    : vocab_(std::move(vocab)), wffs_(std::move(wffs)) {
  for (const Formula& f : wffs_) {
    if (!(f.vocab() == vocab_)) {
      throw VocabularyMismatchError(
          "all wffs in an infobase must share its vocabulary");
    }
  }
}

Infobase Infobase::concat(const Infobase& other) const {
  if (!(vocab_ == other.vocab_)) {
    throw VocabularyMismatchError(
        "concatenating infobases over different vocabularies");
  }
  std::vector<Formula> all = wffs_;
  all.insert(all.end(), other.wffs_.begin(), other.wffs_.end());
  return Infobase(vocab_, std::move(all));
}

Rank ib_number(const Infobase& ib, Interpretation u) {
  Rank count = 0;
  for (const Formula& f : ib.wffs()) {
    if (!is_tautology(f) && f.evaluate(u)) ++count;
  }
  return count;
}

Rank ib_max(const Infobase& ib) {
  Rank best = 0;
  for (std::size_t i = 0; i < ib.vocab().interpretation_count(); ++i) {
    best = std::max(
        best, ib_number(ib, Interpretation(static_cast<std::uint32_t>(i))));
  }
  return best;
}

EpistemicState state_from_infobase(const Infobase& ib) {
  const Rank top = ib_max(ib);
  std::vector<Rank> ranks(ib.vocab().interpretation_count());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    ranks[i] = top - ib_number(ib, Interpretation(static_cast<std::uint32_t>(i)));
  }
  return EpistemicState(ib.vocab(), std::move(ranks));
}

InfobaseList::InfobaseList(std::vector<Infobase> bases)
    : bases_(std::move(bases)) {
  if (bases_.empty()) {
    throw EmptyListError("infobase lists must be non-empty");
  }
  for (const Infobase& ib : bases_) {
    if (!(ib.vocab() == bases_.front().vocab())) {
      throw VocabularyMismatchError(
          "all infobases in a list must share one vocabulary");
    }
  }
}

Infobase InfobaseList::concatenated() const {
  Infobase out = bases_.front();
  for (std::size_t i = 1; i < bases_.size(); ++i) {
    out = out.concat(bases_[i]);
  }
  return out;
}

EpistemicList epistemic_list_from(const InfobaseList& eb) {
  std::vector<EpistemicState> states;
  states.reserve(eb.size());
  for (const Infobase& ib : eb.bases()) {
    states.push_back(state_from_infobase(ib));
  }
  return EpistemicList(std::move(states));
}

bool sigma_concat_identity_holds(const InfobaseList& eb) {
  const EpistemicState merged =
      merge(OperatorId::kSigma, epistemic_list_from(eb));
  const EpistemicState lifted = state_from_infobase(eb.concatenated());
  return states_equal(merged, lifted);
}

}  // namespace rankmerge
