#pragma once

#include <vector>

#include "rankmerge/epistemic.hpp"
#include "rankmerge/formula.hpp"

namespace rankmerge {

/// A finite list of independently obtained wffs. The list may be empty
/// and its members may be individually or jointly inconsistent; it is a
/// list, not a set, so duplicates count separately.
class Infobase {
 public:
  /// The vocabulary is explicit so that an empty infobase still lives in
  /// a definite universe. All wffs must share it.
  Infobase(Vocabulary vocab, std::vector<Formula> wffs);

  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<Formula>& wffs() const { return wffs_; }
  std::size_t size() const { return wffs_.size(); }

  Infobase concat(const Infobase& other) const;

 private:
  Vocabulary vocab_;
  std::vector<Formula> wffs_;
};

/// Number of non-tautological elements of the infobase that u satisfies.
Rank ib_number(const Infobase& ib, Interpretation u);

/// The largest ib_number over all interpretations.
Rank ib_max(const Infobase& ib);

/// The epistemic state of an infobase: rank(u) = ib_max - ib_number(u).
/// The more elements an interpretation satisfies, the more plausible it
/// is. The associated knowledge base is always consistent.
EpistemicState state_from_infobase(const Infobase& ib);

/// A non-empty list of infobases over one vocabulary.
class InfobaseList {
 public:
  explicit InfobaseList(std::vector<Infobase> bases);

  const std::vector<Infobase>& bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  const Vocabulary& vocab() const { return bases_.front().vocab(); }

  /// All members concatenated into one infobase.
  Infobase concatenated() const;

 private:
  std::vector<Infobase> bases_;
};

/// Position-wise lifting of every infobase to its epistemic state.
EpistemicList epistemic_list_from(const InfobaseList& eb);

/// True iff summing the lifted states equals lifting the concatenated
/// infobase. Holds for every infobase list; exposed as a checkable
/// identity.
bool sigma_concat_identity_holds(const InfobaseList& eb);

}  // namespace rankmerge
