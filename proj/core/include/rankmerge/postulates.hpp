#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "rankmerge/epistemic.hpp"
#include "rankmerge/formula.hpp"
#include "rankmerge/operators.hpp"

namespace rankmerge {

/// Finite bounds for the exhaustive checks. The postulates quantify over
/// infinite domains; every verdict here is relative to these bounds.
struct SearchBounds {
  std::size_t n_atoms = 2;
  Rank max_rank = 2;        // states range over {0..max_rank}
  std::size_t list_len = 2; // lists have 1..list_len members
  std::size_t rep_bound = 4;  // repetition counts n in Arb/Maj/arb/maj
  std::size_t meta_list_len = 2;  // |E-list of lists| in E5/E6
};

struct CheckOptions {
  /// Upper bound on scanned instances. One instance is one assignment of
  /// the outer quantifiers of the postulate: a list for E1-E4/Unit/Comm/
  /// KP1-KP3, a tuple of lists for E5/E6/KP5/KP6, a pair of states for
  /// KP4, an (E, state, n) triple for Arb/arb and an (E, state) pair for
  /// Maj/maj. Instances are consumed in enumeration order; a check that
  /// cannot reach a verdict within the budget raises BudgetExceededError.
  std::uint64_t budget = 100'000'000;
  std::size_t seq_enumeration_limit = kDefaultSeqEnumerationLimit;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

enum class PostulateId : std::uint8_t {
  kE1, kE2, kE3, kE4, kE5, kE6,
  kUnit, kComm, kArb, kMaj,
  kKp1, kKp2, kKp3, kKp4, kKp5, kKp6,
  kKbArb,  // (arb), knowledge-base level
  kKbMaj,  // (maj), knowledge-base level
};

inline constexpr std::array<PostulateId, 18> kAllPostulates = {
    PostulateId::kE1,  PostulateId::kE2,  PostulateId::kE3,
    PostulateId::kE4,  PostulateId::kE5,  PostulateId::kE6,
    PostulateId::kUnit, PostulateId::kComm, PostulateId::kArb,
    PostulateId::kMaj, PostulateId::kKp1, PostulateId::kKp2,
    PostulateId::kKp3, PostulateId::kKp4, PostulateId::kKp5,
    PostulateId::kKp6, PostulateId::kKbArb, PostulateId::kKbMaj,
};

/// Display names: E1..E6, Unit, Comm, Arb, Maj, KP1..KP6, arb, maj.
/// Lookup is case-sensitive because Arb/arb and Maj/maj are distinct
/// postulates.
std::string_view postulate_name(PostulateId p);
std::optional<PostulateId> postulate_from_name(std::string_view name);

/// An ordered list of consistent knowledge bases over one vocabulary.
class KnowledgeList {
 public:
  explicit KnowledgeList(std::vector<Formula> elements);

  std::size_t size() const { return elements_.size(); }
  const Formula& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Formula>& elements() const { return elements_; }
  const Vocabulary& vocab() const { return elements_.front().vocab(); }

  KnowledgeList concat(const KnowledgeList& other) const;
  KnowledgeList append_copies(const Formula& f, std::size_t n) const;

 private:
  std::vector<Formula> elements_;
};

/// Merge at the knowledge-base level: lift every element to its
/// distance-based state, merge, and take the associated knowledge base.
KnowledgeBaseView induced_kb_merge(OperatorId op, const KnowledgeList& e,
                                   const MergeOptions& options = {});

enum class VerdictStatus : std::uint8_t {
  kHoldsInBounds,
  kViolated,
  kUnknown,
};

std::string_view verdict_status_name(VerdictStatus s);

/// A structured counterexample (or, for unknown verdicts, the unsettled
/// instance). Only the fields relevant to the postulate are populated.
struct Witness {
  std::vector<EpistemicList> epistemic_lists;
  std::optional<EpistemicState> repeated_state;  // phi in Arb/Maj
  std::vector<KnowledgeList> knowledge_lists;
  std::optional<Formula> repeated_kb;            // phi in arb/maj
  std::optional<Interpretation> u;
  std::optional<Interpretation> v;
  std::optional<std::size_t> repetitions;
  std::string note;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kHoldsInBounds;
  /// Present iff status == kViolated; replayable counterexample.
  std::optional<Witness> witness;
  /// Present iff status == kUnknown: the earliest instance the bounded
  /// search could not settle (an existential with no witness in range).
  std::optional<Witness> unknown_candidate;
};

/// Atom names p, q, r, ... for generated vocabularies.
Vocabulary default_vocabulary(std::size_t n_atoms);

/// Every rank function over the bounds' vocabulary with ranks in
/// {0..max_rank}, in a fixed enumeration order (interpretation 0 varies
/// fastest). Raises BudgetExceededError if there are more states than the
/// budget allows.
std::vector<EpistemicState> enumerate_states(const SearchBounds& bounds,
                                             const CheckOptions& options = {});

Verdict check_E(int k, OperatorId op, const SearchBounds& bounds,
                const CheckOptions& options = {});
/// KP1-KP3 and KP5-KP6 quantify over lists of consistent canonical
/// knowledge bases, merged through the distance lifting. KP4 quantifies
/// over pairs of epistemic states with contradicting associated knowledge
/// bases; through the flat lifting it is unfalsifiable for nearly every
/// operator, because a nearest counterpart of any minimising model is
/// itself minimal.
Verdict check_unit(OperatorId op, const SearchBounds& bounds,
                   const CheckOptions& options = {});
Verdict check_comm(OperatorId op, const SearchBounds& bounds,
                   const CheckOptions& options = {});
Verdict check_arb(OperatorId op, const SearchBounds& bounds,
                  const CheckOptions& options = {});
Verdict check_maj(OperatorId op, const SearchBounds& bounds,
                  const CheckOptions& options = {});
Verdict check_KP(int k, OperatorId op, const SearchBounds& bounds,
                 const CheckOptions& options = {});
Verdict check_kb_arb(OperatorId op, const SearchBounds& bounds,
                     const CheckOptions& options = {});
Verdict check_kb_maj(OperatorId op, const SearchBounds& bounds,
                     const CheckOptions& options = {});

/// Dispatch by id.
Verdict check_postulate(PostulateId p, OperatorId op,
                        const SearchBounds& bounds,
                        const CheckOptions& options = {});

/// Re-evaluates a verdict's witness (or unknown candidate) through the
/// public merge API. True iff the payload still demonstrates what the
/// verdict claims. Holds-in-bounds verdicts replay trivially.
bool replay_witness(PostulateId p, OperatorId op, const Verdict& verdict,
                    const SearchBounds& bounds,
                    const CheckOptions& options = {});

struct MatrixCell {
  OperatorId op;
  PostulateId postulate;
  Verdict verdict;
};

struct SatisfactionMatrix {
  SearchBounds bounds;
  std::vector<MatrixCell> cells;  // operators outer, postulates inner

  const Verdict& at(OperatorId op, PostulateId p) const;
};

/// Runs every postulate checker against every operator.
SatisfactionMatrix satisfaction_matrix(const SearchBounds& bounds,
                                       const CheckOptions& options = {});

}  // namespace rankmerge
