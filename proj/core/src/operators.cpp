#include "rankmerge/operators.hpp"

#include <algorithm>
#include <cctype>

#include "rankmerge/errors.hpp"

namespace rankmerge {

namespace {

constexpr std::array<std::string_view, 9> kOperatorNames = {
    "ls", "rls", "max", "gmax", "cons", "rcons", "sigma", "rsigma", "lex"};

// Everything that distinguishes the nine constructions: which view of the
// realized sequence is ranked, and how. Direct operators skip the Omega
// machinery entirely.
struct OperatorShape {
  enum class Mode { kDirect, kClosedFormLex, kEnumeratedOmega };
  Mode mode;
  SequenceVariant variant;
  SpaceKind space;
  OrderKind order;
};

OperatorShape shape_of(OperatorId op) {
  using Mode = OperatorShape::Mode;
  switch (op) {
    case OperatorId::kLs:
    case OperatorId::kMax:
    case OperatorId::kSigma:
      return {Mode::kDirect, SequenceVariant::kAsIs, SpaceKind::kAll,
              OrderKind::kLex};
    case OperatorId::kRls:
      return {Mode::kClosedFormLex, SequenceVariant::kSortedUp,
              SpaceKind::kNonDecreasing, OrderKind::kLex};
    case OperatorId::kGmax:
      return {Mode::kClosedFormLex, SequenceVariant::kSortedDown,
              SpaceKind::kNonIncreasing, OrderKind::kLex};
    case OperatorId::kLex:
      return {Mode::kClosedFormLex, SequenceVariant::kAsIs, SpaceKind::kAll,
              OrderKind::kLex};
    case OperatorId::kCons:
      return {Mode::kEnumeratedOmega, SequenceVariant::kAsIs, SpaceKind::kAll,
              OrderKind::kDisagreement};
    case OperatorId::kRcons:
      return {Mode::kEnumeratedOmega, SequenceVariant::kSortedUp,
              SpaceKind::kNonDecreasing, OrderKind::kDisagreementThenLex};
    case OperatorId::kRsigma:
      return {Mode::kEnumeratedOmega, SequenceVariant::kAsIs, SpaceKind::kAll,
              OrderKind::kSumThenDisagreement};
  }
  throw Error("corrupt operator id");
}

// The direct pre-rank formulas.
Rank direct_pre_rank(OperatorId op, const RankSequence& s) {
  switch (op) {
    case OperatorId::kLs: {
      const Rank low = *std::min_element(s.begin(), s.end());
      const bool agree =
          std::all_of(s.begin(), s.end(), [&](Rank v) { return v == low; });
      const Rank doubled = checked_mul(low, 2);
      return agree ? doubled : checked_add(doubled, 1);
    }
    case OperatorId::kMax:
      return *std::max_element(s.begin(), s.end());
    case OperatorId::kSigma:
      return sum_measure(s);
    default:
      throw Error("operator has no direct formula");
  }
}

}  // namespace

std::string_view operator_name(OperatorId op) {
  return kOperatorNames[static_cast<std::size_t>(op)];
}

std::optional<OperatorId> operator_from_name(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (std::size_t i = 0; i < kOperatorNames.size(); ++i) {
    if (lowered == kOperatorNames[i]) return kAllOperators[i];
  }
  return std::nullopt;
}

bool is_commutative(OperatorId op) { return op != OperatorId::kLex; }

std::vector<Rank> pre_ranks(OperatorId op, const EpistemicList& E,
                            const MergeOptions& options) {
  const OperatorShape shape = shape_of(op);
  const std::size_t n = E.vocab().interpretation_count();
  std::vector<Rank> out(n);

  switch (shape.mode) {
    case OperatorShape::Mode::kDirect: {
      for (std::size_t i = 0; i < n; ++i) {
        Interpretation u(static_cast<std::uint32_t>(i));
        out[i] = direct_pre_rank(
            op, realized_sequence(E, u, SequenceVariant::kAsIs));
      }
      return out;
    }
    case OperatorShape::Mode::kClosedFormLex: {
      const SequenceSpace space = space_of(E, shape.space);
      for (std::size_t i = 0; i < n; ++i) {
        Interpretation u(static_cast<std::uint32_t>(i));
        out[i] = lex_rank_closed_form(space,
                                      realized_sequence(E, u, shape.variant));
      }
      return out;
    }
    case OperatorShape::Mode::kEnumeratedOmega: {
      const SequenceSpace space = space_of(E, shape.space);
      const SequenceOrder order{shape.order};
      // One shared pass over the candidate space; each interpretation is
      // then a binary search among the key classes.
      const auto& classes =
          space_key_classes(space, order, options.seq_enumeration_limit);
      for (std::size_t i = 0; i < n; ++i) {
        Interpretation u(static_cast<std::uint32_t>(i));
        const std::vector<Rank> key =
            order.key(realized_sequence(E, u, shape.variant));
        auto it = std::lower_bound(classes.begin(), classes.end(), key);
        out[i] = static_cast<Rank>(it - classes.begin());
      }
      return out;
    }
  }
  throw Error("corrupt operator shape");
}

EpistemicState merge(OperatorId op, const EpistemicList& E,
                     const MergeOptions& options) {
  return EpistemicState(E.vocab(), pre_ranks(op, E, options)).normalized();
}

EpistemicState merge_ls(const EpistemicList& E) {
  return merge(OperatorId::kLs, E);
}
EpistemicState merge_rls(const EpistemicList& E) {
  return merge(OperatorId::kRls, E);
}
EpistemicState merge_max(const EpistemicList& E) {
  return merge(OperatorId::kMax, E);
}
EpistemicState merge_gmax(const EpistemicList& E) {
  return merge(OperatorId::kGmax, E);
}
EpistemicState merge_cons(const EpistemicList& E,
                          const MergeOptions& options) {
  return merge(OperatorId::kCons, E, options);
}
EpistemicState merge_rcons(const EpistemicList& E,
                           const MergeOptions& options) {
  return merge(OperatorId::kRcons, E, options);
}
EpistemicState merge_sigma(const EpistemicList& E) {
  return merge(OperatorId::kSigma, E);
}
EpistemicState merge_rsigma(const EpistemicList& E,
                            const MergeOptions& options) {
  return merge(OperatorId::kRsigma, E, options);
}
EpistemicState merge_lex(const EpistemicList& E) {
  return merge(OperatorId::kLex, E);
}

std::vector<Rank> merge_order_key(OperatorId op, const EpistemicList& E,
                                  Interpretation u) {
  return merge_order_key(op, realized_sequence(E, u, SequenceVariant::kAsIs));
}

std::vector<Rank> merge_order_key(OperatorId op, const RankSequence& s) {
  std::vector<Rank> out(s.size() + 2);
  out.resize(write_merge_order_key(op, s.data(), s.size(), out.data(),
                                   out.size()));
  return out;
}

namespace {

Rank raw_sum(const Rank* seq, std::size_t len) {
  Rank total = 0;
  for (std::size_t i = 0; i < len; ++i) total = checked_add(total, seq[i]);
  return total;
}

Rank raw_d(const Rank* seq, std::size_t len) {
  Rank total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      total = checked_add(
          total, seq[i] > seq[j] ? seq[i] - seq[j] : seq[j] - seq[i]);
    }
  }
  return total;
}

void copy_sorted(const Rank* seq, std::size_t len, Rank* out,
                 bool descending) {
  for (std::size_t i = 0; i < len; ++i) {
    // Insertion sort; keys are short.
    Rank value = seq[i];
    std::size_t j = i;
    while (j > 0 &&
           (descending ? out[j - 1] < value : out[j - 1] > value)) {
      out[j] = out[j - 1];
      --j;
    }
    out[j] = value;
  }
}

}  // namespace

std::size_t write_merge_order_key(OperatorId op, const Rank* seq,
                                  std::size_t len, Rank* out,
                                  std::size_t capacity) {
  if (len == 0) {
    throw EmptyListError("order keys require a non-empty sequence");
  }
  if (capacity < len + 2) {
    throw Error("order key buffer too small");
  }
  switch (op) {
    case OperatorId::kLs: {
      Rank low = seq[0];
      bool agree = true;
      for (std::size_t i = 1; i < len; ++i) {
        low = std::min(low, seq[i]);
        agree = agree && seq[i] == seq[0];
      }
      const Rank doubled = checked_mul(low, 2);
      out[0] = agree ? doubled : checked_add(doubled, 1);
      return 1;
    }
    case OperatorId::kMax: {
      Rank high = seq[0];
      for (std::size_t i = 1; i < len; ++i) high = std::max(high, seq[i]);
      out[0] = high;
      return 1;
    }
    case OperatorId::kSigma:
      out[0] = raw_sum(seq, len);
      return 1;
    case OperatorId::kRls:
      copy_sorted(seq, len, out, /*descending=*/false);
      return len;
    case OperatorId::kGmax:
      copy_sorted(seq, len, out, /*descending=*/true);
      return len;
    case OperatorId::kLex:
      std::copy(seq, seq + len, out);
      return len;
    case OperatorId::kCons:
      out[0] = raw_d(seq, len);
      return 1;
    case OperatorId::kRcons:
      // Disagreement is permutation-invariant, so it can be taken from
      // the unsorted sequence.
      out[0] = raw_d(seq, len);
      copy_sorted(seq, len, out + 1, /*descending=*/false);
      return len + 1;
    case OperatorId::kRsigma:
      out[0] = raw_sum(seq, len);
      out[1] = raw_d(seq, len);
      return 2;
  }
  throw Error("corrupt operator id");
}

}  // namespace rankmerge
