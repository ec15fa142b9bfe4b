#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rankmerge/epistemic.hpp"

namespace rankmerge {

/// The ranks a list of states assigns to one interpretation, in list
/// order (or sorted, see SequenceVariant).
using RankSequence = std::vector<Rank>;

enum class SpaceKind : std::uint8_t {
  kAll,            // seq(E)
  kNonDecreasing,  // seq<=(E)
  kNonIncreasing,  // seq>=(E)
};

/// A candidate space: every sequence of a fixed length with entries in
/// [0, bound], restricted by the kind's monotonicity requirement.
struct SequenceSpace {
  SpaceKind kind;
  std::size_t length;
  Rank bound;

  bool contains(const RankSequence& s) const;

  /// Number of sequences in the space; saturates at Rank max when the
  /// closed form overflows.
  Rank size_or_max() const;

  /// Invokes fn on every sequence, in ascending lexicographic order.
  template <typename Fn>
  void for_each(Fn&& fn) const;

  friend auto operator<=>(const SequenceSpace&, const SequenceSpace&) =
      default;
};

/// The candidate space of an epistemic list: length |E|, entries bounded
/// by max(E).
SequenceSpace space_of(const EpistemicList& E, SpaceKind kind);

enum class OrderKind : std::uint8_t {
  kLex,                  // pure lexicographic
  kDisagreement,         // by d only
  kDisagreementThenLex,  // d, ties broken lexicographically
  kSumThenDisagreement,  // sum, ties broken by d
};

/// A total preorder on sequences, given by a key function: sequences
/// compare as their keys compare lexicographically.
struct SequenceOrder {
  OrderKind kind;

  std::vector<Rank> key(const RankSequence& s) const;
  std::weak_ordering compare(const RankSequence& a,
                             const RankSequence& b) const;

  friend auto operator<=>(const SequenceOrder&, const SequenceOrder&) =
      default;
};

/// Pairwise disagreement: the sum of |s_i - s_j| over all i < j.
Rank d_measure(const RankSequence& s);

/// Sum of the entries (checked).
Rank sum_measure(const RankSequence& s);

inline constexpr std::size_t kDefaultSeqEnumerationLimit = std::size_t{1}
                                                           << 20;

/// Dense rank of s within the space under the order: the number of key
/// classes strictly below s's key. Ties share a rank and the lowest class
/// gets 0. Requires enumerating the space, so spaces larger than the
/// limit raise SpaceTooLargeError; sequences outside the space raise
/// SequenceNotInSpaceError.
Rank omega_rank(const SequenceSpace& space, const SequenceOrder& order,
                const RankSequence& s,
                std::size_t enumeration_limit = kDefaultSeqEnumerationLimit);

/// Equals omega_rank under the pure lexicographic order, computed without
/// enumeration: a mixed-radix number for unrestricted spaces and a
/// binomial count of preceding monotone sequences otherwise.
Rank lex_rank_closed_form(const SequenceSpace& space, const RankSequence& s);

/// The sorted distinct key vectors of a space under an order, ascending.
/// Results are cached process-wide; computing one is subject to the same
/// enumeration limit as omega_rank.
const std::vector<std::vector<Rank>>& space_key_classes(
    const SequenceSpace& space, const SequenceOrder& order,
    std::size_t enumeration_limit = kDefaultSeqEnumerationLimit);

enum class SequenceVariant : std::uint8_t {
  kAsIs,       // s^E(u)
  kSortedUp,   // s^E(u) ordered non-decreasingly
  kSortedDown, // s^E(u) ordered non-increasingly
};

/// The ranks the list's states assign to u, in list order or sorted.
RankSequence realized_sequence(const EpistemicList& E, Interpretation u,
                               SequenceVariant variant);

// --- template definition ---

template <typename Fn>
void SequenceSpace::for_each(Fn&& fn) const {
  RankSequence s(length, 0);
  if (length == 0) {
    fn(static_cast<const RankSequence&>(s));
    return;
  }
  while (true) {
    fn(static_cast<const RankSequence&>(s));
    // Advance to the lexicographic successor within the space: bump the
    // rightmost entry that has headroom, then reset the tail to its
    // smallest admissible values.
    std::size_t i = length;
    while (i > 0) {
      --i;
      const Rank ceiling =
          kind == SpaceKind::kNonIncreasing
              ? (i == 0 ? bound : std::min(bound, s[i - 1]))
              : bound;
      if (s[i] < ceiling) {
        ++s[i];
        for (std::size_t j = i + 1; j < length; ++j) {
          s[j] = kind == SpaceKind::kNonDecreasing ? s[i] : 0;
        }
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace rankmerge
