#include "rankmerge/sequences.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "rankmerge/errors.hpp"

namespace rankmerge {

namespace {

constexpr Rank kRankMax = std::numeric_limits<Rank>::max();

Rank saturating_mul(Rank a, Rank b) {
  if (b != 0 && a > kRankMax / b) return kRankMax;
  return a * b;
}

// C(n, k), saturating at Rank max.
Rank binomial_or_max(Rank n, Rank k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Rank result = 1;
  for (Rank i = 1; i <= k; ++i) {
    // result * (n - k + i) stays exactly divisible by i.
    Rank factor = n - k + i;
    if (result > kRankMax / factor) return kRankMax;
    result = result * factor / i;
  }
  return result;
}

}  // namespace

bool SequenceSpace::contains(const RankSequence& s) const {
  if (s.size() != length) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > bound) return false;
    if (i > 0) {
      if (kind == SpaceKind::kNonDecreasing && s[i] < s[i - 1]) return false;
      if (kind == SpaceKind::kNonIncreasing && s[i] > s[i - 1]) return false;
    }
  }
  return true;
}

Rank SequenceSpace::size_or_max() const {
  if (bound >= kRankMax - static_cast<Rank>(length)) return kRankMax;
  if (kind == SpaceKind::kAll) {
    Rank out = 1;
    for (std::size_t i = 0; i < length; ++i) {
      out = saturating_mul(out, bound + 1);
    }
    return out;
  }
  // Monotone sequences of length L over bound+1 values: C(bound + L, L).
  return binomial_or_max(bound + static_cast<Rank>(length),
                         static_cast<Rank>(length));
}

SequenceSpace space_of(const EpistemicList& E, SpaceKind kind) {
  return SequenceSpace{kind, E.size(), E.max_rank()};
}

Rank d_measure(const RankSequence& s) {
  Rank total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      total = checked_add(total, s[i] > s[j] ? s[i] - s[j] : s[j] - s[i]);
    }
  }
  return total;
}

Rank sum_measure(const RankSequence& s) {
  Rank total = 0;
  for (Rank v : s) total = checked_add(total, v);
  return total;
}

std::vector<Rank> SequenceOrder::key(const RankSequence& s) const {
  switch (kind) {
    case OrderKind::kLex:
      return s;
    case OrderKind::kDisagreement:
      return {d_measure(s)};
    case OrderKind::kDisagreementThenLex: {
      std::vector<Rank> k;
      k.reserve(s.size() + 1);
      k.push_back(d_measure(s));
      k.insert(k.end(), s.begin(), s.end());
      return k;
    }
    case OrderKind::kSumThenDisagreement:
      return {sum_measure(s), d_measure(s)};
  }
  throw Error("corrupt order kind");
}

std::weak_ordering SequenceOrder::compare(const RankSequence& a,
                                          const RankSequence& b) const {
  const std::vector<Rank> ka = key(a);
  const std::vector<Rank> kb = key(b);
  if (ka < kb) return std::weak_ordering::less;
  if (kb < ka) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

const std::vector<std::vector<Rank>>& space_key_classes(
    const SequenceSpace& space, const SequenceOrder& order,
    std::size_t enumeration_limit) {
  if (space.size_or_max() > enumeration_limit) {
    throw SpaceTooLargeError(
        "candidate space has " +
        (space.size_or_max() == std::numeric_limits<Rank>::max()
             ? std::string("more than 2^64")
             : std::to_string(space.size_or_max())) +
        " sequences, enumeration limit is " +
        std::to_string(enumeration_limit));
  }

  using CacheKey = std::tuple<SpaceKind, std::size_t, Rank, OrderKind>;
  static std::mutex mutex;
  static std::map<CacheKey, std::unique_ptr<std::vector<std::vector<Rank>>>>
      cache;

  const CacheKey key{space.kind, space.length, space.bound, order.kind};
  std::scoped_lock lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto classes = std::make_unique<std::vector<std::vector<Rank>>>();
    classes->reserve(static_cast<std::size_t>(space.size_or_max()));
    space.for_each(
        [&](const RankSequence& s) { classes->push_back(order.key(s)); });
    std::sort(classes->begin(), classes->end());
    classes->erase(std::unique(classes->begin(), classes->end()),
                   classes->end());
    it = cache.emplace(key, std::move(classes)).first;
  }
  return *it->second;
}

Rank omega_rank(const SequenceSpace& space, const SequenceOrder& order,
                const RankSequence& s, std::size_t enumeration_limit) {
  if (!space.contains(s)) {
    throw SequenceNotInSpaceError(
        "sequence does not belong to the candidate space");
  }
  const auto& classes = space_key_classes(space, order, enumeration_limit);
  const std::vector<Rank> k = order.key(s);
  auto it = std::lower_bound(classes.begin(), classes.end(), k);
  return static_cast<Rank>(it - classes.begin());
}

Rank lex_rank_closed_form(const SequenceSpace& space, const RankSequence& s) {
  if (!space.contains(s)) {
    throw SequenceNotInSpaceError(
        "sequence does not belong to the candidate space");
  }
  switch (space.kind) {
    case SpaceKind::kAll: {
      // Mixed-radix number with radix bound + 1.
      Rank out = 0;
      for (Rank v : s) {
        out = checked_add(checked_mul(out, space.bound + 1), v);
      }
      return out;
    }
    case SpaceKind::kNonDecreasing: {
      // Count members that are lexicographically smaller: fix a common
      // prefix, pick a smaller admissible entry, and count the monotone
      // completions of the tail.
      Rank out = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Rank low = i == 0 ? 0 : s[i - 1];
        const Rank tail = static_cast<Rank>(s.size() - i - 1);
        for (Rank v = low; v < s[i]; ++v) {
          // Non-decreasing tails with entries in [v, bound].
          out = checked_add(out,
                            binomial_or_max(space.bound - v + tail, tail));
        }
      }
      return out;
    }
    case SpaceKind::kNonIncreasing: {
      Rank out = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Rank tail = static_cast<Rank>(s.size() - i - 1);
        for (Rank v = 0; v < s[i]; ++v) {
          // Non-increasing tails with entries in [0, v].
          out = checked_add(out, binomial_or_max(v + tail, tail));
        }
      }
      return out;
    }
  }
  throw Error("corrupt space kind");
}

RankSequence realized_sequence(const EpistemicList& E, Interpretation u,
                               SequenceVariant variant) {
  RankSequence s;
  s.reserve(E.size());
  for (const EpistemicState& state : E.states()) s.push_back(state.rank(u));
  switch (variant) {
    case SequenceVariant::kAsIs:
      break;
    case SequenceVariant::kSortedUp:
      std::sort(s.begin(), s.end());
      break;
    case SequenceVariant::kSortedDown:
      std::sort(s.begin(), s.end(), std::greater<Rank>());
      break;
  }
  return s;
}

}  // namespace rankmerge
