#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "rankmerge/epistemic.hpp"
#include "rankmerge/sequences.hpp"

namespace rankmerge {

/// The nine merging operations. Every one is built in two steps: assign a
/// pre-normalisation number to each interpretation, then subtract the
/// minimum so the result ranks something at 0.
enum class OperatorId : std::uint8_t {
  kLs,      // doubled minimum, +1 on disagreement
  kRls,     // lexicographic rank of the sorted-up sequence
  kMax,     // pointwise maximum
  kGmax,    // lexicographic rank of the sorted-down sequence
  kCons,    // rank by pairwise disagreement only
  kRcons,   // disagreement, ties broken lexicographically
  kSigma,   // pointwise sum
  kRsigma,  // sum, ties broken by disagreement
  kLex,     // lexicographic rank of the unsorted sequence (positional
            // reliability: earlier states dominate)
};

inline constexpr std::array<OperatorId, 9> kAllOperators = {
    OperatorId::kLs,   OperatorId::kRls,    OperatorId::kMax,
    OperatorId::kGmax, OperatorId::kCons,   OperatorId::kRcons,
    OperatorId::kSigma, OperatorId::kRsigma, OperatorId::kLex,
};

/// CLI spelling: ls, rls, max, gmax, cons, rcons, sigma, rsigma, lex.
std::string_view operator_name(OperatorId op);

/// Case-insensitive lookup of the CLI spelling.
std::optional<OperatorId> operator_from_name(std::string_view name);

/// True for every operator whose result is invariant under permutations
/// of the input list. This is structural: all order keys except kLex are
/// symmetric functions of the realized sequence.
bool is_commutative(OperatorId op);

struct MergeOptions {
  std::size_t seq_enumeration_limit = kDefaultSeqEnumerationLimit;
};

/// Pre-normalisation numbers, indexed by interpretation. These are the
/// cell values of the two-state tables drawn by cmd `cells`.
std::vector<Rank> pre_ranks(OperatorId op, const EpistemicList& E,
                            const MergeOptions& options = {});

/// Merge the list: normalized pre-ranks.
EpistemicState merge(OperatorId op, const EpistemicList& E,
                     const MergeOptions& options = {});

EpistemicState merge_ls(const EpistemicList& E);
EpistemicState merge_rls(const EpistemicList& E);
EpistemicState merge_max(const EpistemicList& E);
EpistemicState merge_gmax(const EpistemicList& E);
EpistemicState merge_cons(const EpistemicList& E,
                          const MergeOptions& options = {});
EpistemicState merge_rcons(const EpistemicList& E,
                           const MergeOptions& options = {});
EpistemicState merge_sigma(const EpistemicList& E);
EpistemicState merge_rsigma(const EpistemicList& E,
                            const MergeOptions& options = {});
EpistemicState merge_lex(const EpistemicList& E);

/// A totally ordered key for one interpretation: keys compare (as vectors,
/// lexicographically) exactly as the merged ranks compare. Computable
/// without enumerating any candidate space, so it works for lists whose
/// spaces are too large to rank densely. Postulates that only constrain
/// the order of the merged state are checked through this.
std::vector<Rank> merge_order_key(OperatorId op, const EpistemicList& E,
                                  Interpretation u);

/// Same key for an interpretation whose realized (as-is) sequence is
/// given directly.
std::vector<Rank> merge_order_key(OperatorId op, const RankSequence& s);

/// Allocation-free form for hot loops: writes the key of seq[0..len) into
/// out and returns the key length. capacity must be at least len + 2.
std::size_t write_merge_order_key(OperatorId op, const Rank* seq,
                                  std::size_t len, Rank* out,
                                  std::size_t capacity);

}  // namespace rankmerge
