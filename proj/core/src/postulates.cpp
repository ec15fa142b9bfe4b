#include "rankmerge/postulates.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "rankmerge/errors.hpp"
#include "rankmerge/sequences.hpp"

namespace rankmerge {

namespace {

constexpr std::array<std::string_view, 18> kPostulateNames = {
    "E1",  "E2",  "E3",  "E4",  "E5",  "E6",  "Unit", "Comm", "Arb",
    "Maj", "KP1", "KP2", "KP3", "KP4", "KP5", "KP6",  "arb",  "maj"};

constexpr Rank kRankMax = std::numeric_limits<Rank>::max();

Rank saturating_mul(Rank a, Rank b) {
  if (b != 0 && a > kRankMax / b) return kRankMax;
  return a * b;
}

Rank saturating_add(Rank a, Rank b) {
  if (a > kRankMax - b) return kRankMax;
  return a + b;
}

// ---------------------------------------------------------------------
// Enumeration of lists as flat ids: all length-1 lists first (ascending
// item tuples), then length-2, and so on. The leftmost list position is
// the most significant digit.
// ---------------------------------------------------------------------

struct ListSpace {
  std::uint64_t n_items = 0;
  std::size_t max_len = 0;
  std::vector<std::uint64_t> group_size;  // group_size[k]: lists of length k+1
  std::uint64_t total = 0;                // saturating

  static ListSpace make(std::uint64_t n_items, std::size_t max_len) {
    ListSpace space;
    space.n_items = n_items;
    space.max_len = max_len;
    std::uint64_t group = 1;
    for (std::size_t k = 0; k < max_len; ++k) {
      group = saturating_mul(group, n_items);
      space.group_size.push_back(group);
      space.total = saturating_add(space.total, group);
    }
    return space;
  }

  void decode(std::uint64_t id, std::vector<std::uint32_t>& out) const {
    std::size_t len = 0;
    while (id >= group_size[len]) {
      id -= group_size[len];
      ++len;
    }
    ++len;  // group index -> length
    out.resize(len);
    for (std::size_t i = len; i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(id % n_items);
      id /= n_items;
    }
  }
};

// ---------------------------------------------------------------------
// Universes: every bounded state (epistemic level) and every consistent
// canonical knowledge base (one minterm DNF per non-empty model set).
// ---------------------------------------------------------------------

struct EUniverse {
  Vocabulary vocab;
  std::size_t n_interps;
  std::vector<EpistemicState> states;
  ListSpace lists;
};

EUniverse make_e_universe(const SearchBounds& bounds,
                          const CheckOptions& options) {
  Vocabulary vocab = default_vocabulary(bounds.n_atoms);
  const std::size_t n = vocab.interpretation_count();
  const Rank radix = bounds.max_rank + 1;
  Rank count = 1;
  for (std::size_t i = 0; i < n; ++i) count = saturating_mul(count, radix);
  if (count > options.budget) {
    throw BudgetExceededError(
        "state space has " + std::to_string(count) +
        " members, budget is " + std::to_string(options.budget));
  }
  std::vector<EpistemicState> states;
  states.reserve(static_cast<std::size_t>(count));
  std::vector<Rank> ranks(n, 0);
  for (Rank id = 0; id < count; ++id) {
    Rank rest = id;
    for (std::size_t i = 0; i < n; ++i) {  // interpretation 0 varies fastest
      ranks[i] = rest % radix;
      rest /= radix;
    }
    states.emplace_back(vocab, ranks);
  }
  return EUniverse{std::move(vocab), n, std::move(states),
                   ListSpace::make(count, bounds.list_len)};
}

struct KbUniverse {
  Vocabulary vocab;
  std::size_t n_interps;
  std::vector<ModelSet> model_sets;   // all non-empty subsets of U
  std::vector<EpistemicState> dalal;  // their distance-based states
  ListSpace lists;
};

KbUniverse make_kb_universe(const SearchBounds& bounds,
                            const CheckOptions& options) {
  Vocabulary vocab = default_vocabulary(bounds.n_atoms);
  const std::size_t n = vocab.interpretation_count();
  if (n > 20) throw BudgetExceededError("knowledge-base space too large");
  const std::uint64_t count = (std::uint64_t{1} << n) - 1;
  if (count > options.budget) {
    throw BudgetExceededError("knowledge-base space exceeds the budget");
  }
  std::vector<ModelSet> model_sets;
  std::vector<EpistemicState> dalal;
  model_sets.reserve(count);
  dalal.reserve(count);
  for (std::uint64_t mask = 1; mask <= count; ++mask) {
    ModelSet m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        m.insert(Interpretation(static_cast<std::uint32_t>(i)));
      }
    }
    std::vector<Rank> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned best = std::numeric_limits<unsigned>::max();
      for (Interpretation v : m.interpretations()) {
        best = std::min(best,
                        dist(Interpretation(static_cast<std::uint32_t>(i)), v));
      }
      ranks[i] = best;
    }
    model_sets.push_back(std::move(m));
    dalal.emplace_back(vocab, std::move(ranks));
  }
  return KbUniverse{std::move(vocab), n, std::move(model_sets),
                    std::move(dalal), ListSpace::make(count, bounds.list_len)};
}

// ---------------------------------------------------------------------
// Deterministic parallel search driver. Outer units are scanned in
// enumeration order; each unit costs a fixed number of budget instances.
// The verdict is the one a sequential scan would reach: the earliest
// violation wins, then the earliest unknown, then holds. When the budget
// does not cover the whole space, only the affordable prefix is scanned
// and the check fails with BudgetExceededError unless that prefix already
// contains a violation (or a terminal unknown).
// ---------------------------------------------------------------------

struct BlockOutcome {
  std::optional<Witness> violation;
  std::optional<Witness> unknown;
};

struct DriverResult {
  std::optional<Witness> violation;
  std::optional<Witness> unknown;
};

template <typename Fn>
DriverResult run_outer_scan(std::uint64_t n_outer,
                            std::uint64_t cost_per_outer,
                            const CheckOptions& options, bool stop_on_unknown,
                            const Fn& fn) {
  const std::uint64_t affordable =
      cost_per_outer == 0 ? n_outer : options.budget / cost_per_outer;
  const std::uint64_t n_run = std::min(n_outer, affordable);
  const bool budget_limited = n_run < n_outer;

  std::size_t threads = options.threads != 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<std::size_t>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n_run, 1)));

  const std::uint64_t segment =
      std::max<std::uint64_t>(1, n_run / (threads * 16) + 1);
  const std::uint64_t n_segments = n_run == 0 ? 0 : (n_run - 1) / segment + 1;

  std::atomic<std::uint64_t> next_segment{0};
  std::atomic<std::uint64_t> best_stop{n_run};  // earliest outer that ends the scan
  std::mutex result_mutex;
  std::optional<std::pair<std::uint64_t, Witness>> best_violation;
  std::optional<std::pair<std::uint64_t, Witness>> best_unknown;
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<std::uint32_t> scratch;
    while (true) {
      const std::uint64_t seg = next_segment.fetch_add(1);
      if (seg >= n_segments) return;
      const std::uint64_t begin = seg * segment;
      const std::uint64_t end = std::min(n_run, begin + segment);
      if (begin > best_stop.load(std::memory_order_relaxed)) continue;
      for (std::uint64_t outer = begin; outer < end; ++outer) {
        if (outer > best_stop.load(std::memory_order_relaxed)) break;
        BlockOutcome outcome;
        try {
          outcome = fn(outer, scratch);
        } catch (...) {
          std::scoped_lock lock(result_mutex);
          if (!failure) failure = std::current_exception();
          best_stop.store(0);
          return;
        }
        if (outcome.violation || outcome.unknown) {
          std::scoped_lock lock(result_mutex);
          if (outcome.violation &&
              (!best_violation || outer < best_violation->first)) {
            best_violation = {outer, std::move(*outcome.violation)};
          }
          if (outcome.unknown &&
              (!best_unknown || outer < best_unknown->first)) {
            best_unknown = {outer, std::move(*outcome.unknown)};
          }
          std::uint64_t stop = n_run;
          if (best_violation) stop = best_violation->first;
          if (stop_on_unknown && best_unknown) {
            stop = std::min(stop, best_unknown->first);
          }
          std::uint64_t prev = best_stop.load();
          while (prev > stop && !best_stop.compare_exchange_weak(prev, stop)) {
          }
          if (outer >= stop) break;
        }
      }
    }
  };

  if (threads <= 1 || n_segments <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  DriverResult result;
  if (best_violation) {
    // Unknown candidates found past the deciding violation are irrelevant.
    if (best_unknown && best_unknown->first < best_violation->first) {
      result.unknown = std::move(best_unknown->second);
    }
    result.violation = std::move(best_violation->second);
    return result;
  }
  if (best_unknown && (stop_on_unknown || !budget_limited)) {
    result.unknown = std::move(best_unknown->second);
    return result;
  }
  if (budget_limited) {
    throw BudgetExceededError(
        "check scanned " + std::to_string(n_run * cost_per_outer) +
        " instances without a verdict; budget is " +
        std::to_string(options.budget));
  }
  return result;
}

Verdict to_verdict(DriverResult result) {
  Verdict verdict;
  if (result.violation) {
    verdict.status = VerdictStatus::kViolated;
    verdict.witness = std::move(result.violation);
  } else if (result.unknown) {
    verdict.status = VerdictStatus::kUnknown;
    verdict.unknown_candidate = std::move(result.unknown);
  }
  return verdict;
}

// ---------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------

EpistemicList list_from_ids(const EUniverse& uni,
                            const std::vector<std::uint32_t>& ids) {
  std::vector<EpistemicState> states;
  states.reserve(ids.size());
  for (std::uint32_t id : ids) states.push_back(uni.states[id]);
  return EpistemicList(std::move(states));
}

KnowledgeList kb_list_from_ids(const KbUniverse& uni,
                               const std::vector<std::uint32_t>& ids) {
  std::vector<Formula> elements;
  elements.reserve(ids.size());
  for (std::uint32_t id : ids) {
    elements.push_back(canonical_dnf(uni.model_sets[id], uni.vocab));
  }
  return KnowledgeList(std::move(elements));
}

EpistemicList dalal_list_from_ids(const KbUniverse& uni,
                                  const std::vector<std::uint32_t>& ids,
                                  const Formula* extra, std::size_t copies) {
  std::vector<EpistemicState> states;
  states.reserve(ids.size() + copies);
  for (std::uint32_t id : ids) states.push_back(uni.dalal[id]);
  if (extra) {
    const EpistemicState lifted = state_from_kb(*extra);
    for (std::size_t i = 0; i < copies; ++i) states.push_back(lifted);
  }
  return EpistemicList(std::move(states));
}

EpistemicList dalal_list_from_ids(const KbUniverse& uni,
                                  const std::vector<std::uint32_t>& ids,
                                  std::uint32_t extra_id, std::size_t copies) {
  std::vector<EpistemicState> states;
  states.reserve(ids.size() + copies);
  for (std::uint32_t id : ids) states.push_back(uni.dalal[id]);
  for (std::size_t i = 0; i < copies; ++i) {
    states.push_back(uni.dalal[extra_id]);
  }
  return EpistemicList(std::move(states));
}

MergeOptions merge_options(const CheckOptions& options) {
  return MergeOptions{options.seq_enumeration_limit};
}

// Model set of the induced knowledge-base merge, without building the
// canonical formula.
ModelSet delta_models(OperatorId op, const EpistemicList& lifted,
                      const CheckOptions& options) {
  const EpistemicState merged = merge(op, lifted, merge_options(options));
  ModelSet out(merged.vocab().interpretation_count());
  for (std::size_t i = 0; i < merged.ranks().size(); ++i) {
    if (merged.ranks()[i] == 0) {
      out.insert(Interpretation(static_cast<std::uint32_t>(i)));
    }
  }
  return out;
}

// Repetition-invariant operators: the pre-rank of an interpretation
// depends only on the set of realized values (minimum and maximum are
// idempotent, and "all states agree" ignores duplicates), so appending
// further copies of a state never changes the merge. Used as the
// structural refutation that turns a failed majority search into a
// genuine violation.
bool repetition_invariant(OperatorId op) {
  return op == OperatorId::kLs || op == OperatorId::kMax;
}

// Sum-dominated operators order interpretations by the realized sum
// before anything else, so repetitions eventually force the repeated
// state's order: with n exceeding the spread of the base sums, any pair
// the repeated state ranks strictly apart is ranked strictly apart the
// same way by the merge. Gives the majority search a provably sufficient
// probe count.
bool sum_dominated(OperatorId op) {
  return op == OperatorId::kSigma || op == OperatorId::kRsigma;
}

Rank sum_spread(const EpistemicList& E) {
  Rank low = kRankMax;
  Rank high = 0;
  for (std::size_t i = 0; i < E.vocab().interpretation_count(); ++i) {
    Rank total = 0;
    for (const EpistemicState& s : E.states()) {
      total = checked_add(total,
                          s.rank(Interpretation(static_cast<std::uint32_t>(i))));
    }
    low = std::min(low, total);
    high = std::max(high, total);
  }
  return high - low;
}

// Majority condition at a fixed repetition count, evaluated through order
// keys so that it works for any list length.
bool majority_condition_holds(OperatorId op, const EpistemicList& extended,
                              const EpistemicState& phi) {
  const std::size_t n = phi.vocab().interpretation_count();
  std::vector<std::vector<Rank>> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = merge_order_key(
        op, extended, Interpretation(static_cast<std::uint32_t>(i)));
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (keys[u] <= keys[v] &&
          phi.rank(Interpretation(static_cast<std::uint32_t>(u))) >
              phi.rank(Interpretation(static_cast<std::uint32_t>(v)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------
// Public plumbing
// ---------------------------------------------------------------------

std::string_view postulate_name(PostulateId p) {
  return kPostulateNames[static_cast<std::size_t>(p)];
}

std::optional<PostulateId> postulate_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPostulateNames.size(); ++i) {
    if (name == kPostulateNames[i]) return kAllPostulates[i];
  }
  return std::nullopt;
}

std::string_view verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kHoldsInBounds:
      return "holds-in-bounds";
    case VerdictStatus::kViolated:
      return "violated";
    case VerdictStatus::kUnknown:
      return "unknown";
  }
  return "corrupt";
}

KnowledgeList::KnowledgeList(std::vector<Formula> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw EmptyListError("knowledge lists must be non-empty");
  }
  for (const Formula& f : elements_) {
    if (!(f.vocab() == elements_.front().vocab())) {
      throw VocabularyMismatchError(
          "all knowledge bases in a list must share one vocabulary");
    }
    if (!is_consistent(f)) {
      throw InconsistentKbError(
          "knowledge lists admit only consistent elements");
    }
  }
}

KnowledgeList KnowledgeList::concat(const KnowledgeList& other) const {
  std::vector<Formula> all = elements_;
  all.insert(all.end(), other.elements_.begin(), other.elements_.end());
  return KnowledgeList(std::move(all));
}

KnowledgeList KnowledgeList::append_copies(const Formula& f,
                                           std::size_t n) const {
  std::vector<Formula> all = elements_;
  for (std::size_t i = 0; i < n; ++i) all.push_back(f);
  return KnowledgeList(std::move(all));
}

KnowledgeBaseView induced_kb_merge(OperatorId op, const KnowledgeList& e,
                                   const MergeOptions& options) {
  std::vector<EpistemicState> lifted;
  lifted.reserve(e.size());
  for (const Formula& f : e.elements()) lifted.push_back(state_from_kb(f));
  return knowledge_base(merge(op, EpistemicList(std::move(lifted)), options));
}

Vocabulary default_vocabulary(std::size_t n_atoms) {
  static constexpr std::array<std::string_view, 16> kNames = {
      "p", "q", "r", "s", "t", "u", "v", "w",
      "x", "y", "z", "a", "b", "c", "d", "e"};
  if (n_atoms == 0 || n_atoms > kNames.size()) {
    throw Error("generated vocabularies support 1 to 16 atoms");
  }
  std::vector<std::string> atoms;
  atoms.reserve(n_atoms);
  for (std::size_t i = 0; i < n_atoms; ++i) atoms.emplace_back(kNames[i]);
  return Vocabulary(std::move(atoms));
}

std::vector<EpistemicState> enumerate_states(const SearchBounds& bounds,
                                             const CheckOptions& options) {
  return make_e_universe(bounds, options).states;
}

// ---------------------------------------------------------------------
// Epistemic-level checkers
// ---------------------------------------------------------------------

namespace {

// E1-E4 and Unit share a scan over all lists with an inner pass over
// interpretation pairs.
Verdict check_pointwise_E(int k, OperatorId op, const SearchBounds& bounds,
                          const CheckOptions& options) {
  const EUniverse uni = make_e_universe(bounds, options);
  const std::size_t n = uni.n_interps;
  const MergeOptions mopts = merge_options(options);

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    const EpistemicList E = list_from_ids(uni, ids);
    const EpistemicState merged = merge(op, E, mopts);

    auto witness = [&](std::size_t u, std::size_t v) {
      Witness w;
      w.epistemic_lists = {E};
      w.u = Interpretation(static_cast<std::uint32_t>(u));
      if (k != 1) w.v = Interpretation(static_cast<std::uint32_t>(v));
      return w;
    };

    if (k == 1) {
      for (std::size_t u = 0; u < n; ++u) {
        if (merged.ranks()[u] == 0) return {};
      }
      Witness w;
      w.epistemic_lists = {E};
      w.note = "no interpretation is ranked 0";
      return {w, std::nullopt};
    }

    for (std::size_t u = 0; u < n; ++u) {
      const Interpretation iu(static_cast<std::uint32_t>(u));
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const Interpretation iv(static_cast<std::uint32_t>(v));
        switch (k) {
          case 2: {
            bool uniform = true;
            for (const EpistemicState& s : E.states()) {
              uniform = uniform && s.rank(iu) == E.state(0).rank(iu);
            }
            if (!uniform) break;
            const RankSequence su =
                realized_sequence(E, iu, SequenceVariant::kSortedUp);
            const RankSequence sv =
                realized_sequence(E, iv, SequenceVariant::kSortedUp);
            if (su < sv && !(merged.rank(iu) < merged.rank(iv))) {
              return {witness(u, v), std::nullopt};
            }
            break;
          }
          case 3: {
            bool all_le = true;
            for (const EpistemicState& s : E.states()) {
              all_le = all_le && s.rank(iu) <= s.rank(iv);
            }
            if (all_le && merged.rank(iu) > merged.rank(iv)) {
              return {witness(u, v), std::nullopt};
            }
            break;
          }
          case 4: {
            if (merged.rank(iu) > merged.rank(iv)) break;
            bool some_le = false;
            for (const EpistemicState& s : E.states()) {
              some_le = some_le || s.rank(iu) <= s.rank(iv);
            }
            if (!some_le) return {witness(u, v), std::nullopt};
            break;
          }
          default: {  // Unit
            bool identical = true;
            for (const EpistemicState& s : E.states()) {
              identical = identical && s.rank(iu) == s.rank(iv);
            }
            if (identical && merged.rank(iu) != merged.rank(iv)) {
              return {witness(u, v), std::nullopt};
            }
            break;
          }
        }
      }
    }
    return {};
  };

  return to_verdict(run_outer_scan(uni.lists.total, 1, options, false, fn));
}

// E5/E6: lists of epistemic lists. Single-member tuples are vacuous (the
// concatenation is the member itself), so scanning starts at two members.
// Everything is evaluated through order keys; real merges are only done
// when materialising a witness.
Verdict check_meta_E(int k, OperatorId op, const SearchBounds& bounds,
                     const CheckOptions& options) {
  const EUniverse uni = make_e_universe(bounds, options);
  const std::size_t n = uni.n_interps;
  const std::uint64_t L = uni.lists.total;

  constexpr std::size_t kKeyCap = 72;
  const std::size_t max_concat =
      bounds.meta_list_len * bounds.list_len;
  if (max_concat + 2 > kKeyCap) {
    throw Error("meta-list bounds exceed the key buffer");
  }

  struct Keys {  // per interpretation, fixed capacity
    std::array<Rank, kKeyCap> buf;
    std::size_t len;
  };

  auto gather = [&](const std::vector<std::uint32_t>& ids, std::size_t u,
                    Rank* out) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      out[i] = uni.states[ids[i]].ranks()[u];
    }
    return ids.size();
  };

  auto keys_of = [&](const std::vector<std::uint32_t>& ids,
                     std::vector<Keys>& out) {
    out.resize(n);
    std::array<Rank, kKeyCap> seq;
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t len = gather(ids, u, seq.data());
      out[u].len = write_merge_order_key(op, seq.data(), len,
                                         out[u].buf.data(), kKeyCap);
    }
  };

  auto cmp = [](const Keys& a, const Keys& b) {
    return std::lexicographical_compare_three_way(
        a.buf.begin(), a.buf.begin() + a.len, b.buf.begin(),
        b.buf.begin() + b.len);
  };

  auto make_witness = [&](const std::vector<std::vector<std::uint32_t>>& parts,
                          std::size_t u, std::size_t v) {
    Witness w;
    for (const auto& ids : parts) {
      w.epistemic_lists.push_back(list_from_ids(uni, ids));
    }
    w.u = Interpretation(static_cast<std::uint32_t>(u));
    w.v = Interpretation(static_cast<std::uint32_t>(v));
    return w;
  };

  // Pairs of lists, the main case: outer id is the first member.
  auto pair_fn = [&](std::uint64_t outer,
                     std::vector<std::uint32_t>& ids1) -> BlockOutcome {
    uni.lists.decode(outer, ids1);
    std::vector<Keys> k1;
    keys_of(ids1, k1);

    std::vector<std::uint32_t> ids2;
    std::vector<Keys> k2;
    std::vector<Keys> kc;
    std::vector<std::uint32_t> concat_ids;
    for (std::uint64_t inner = 0; inner < L; ++inner) {
      uni.lists.decode(inner, ids2);
      keys_of(ids2, k2);
      concat_ids = ids1;
      concat_ids.insert(concat_ids.end(), ids2.begin(), ids2.end());
      keys_of(concat_ids, kc);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (u == v) continue;
          const auto c1 = cmp(k1[u], k1[v]);
          const auto c2 = cmp(k2[u], k2[v]);
          const auto cc = cmp(kc[u], kc[v]);
          if (k == 5) {
            if (c1 <= 0 && c2 <= 0 && cc > 0) {
              return {make_witness({ids1, ids2}, u, v), std::nullopt};
            }
          } else {
            if (cc <= 0 && c1 > 0 && c2 > 0) {
              return {make_witness({ids1, ids2}, u, v), std::nullopt};
            }
          }
        }
      }
    }
    return {};
  };

  if (bounds.meta_list_len < 2) return Verdict{};
  Verdict pair_verdict =
      to_verdict(run_outer_scan(L, L, options, false, pair_fn));
  if (pair_verdict.status != VerdictStatus::kHoldsInBounds ||
      bounds.meta_list_len == 2) {
    return pair_verdict;
  }

  // Longer tuples: a sequential odometer. Bounds that reach this far are
  // far beyond the desk scale the acceptance suite uses.
  std::vector<std::vector<std::uint32_t>> parts;
  std::vector<std::vector<Keys>> part_keys;
  std::vector<Keys> kc;
  std::uint64_t scanned = 0;
  for (std::size_t m = 3; m <= bounds.meta_list_len; ++m) {
    std::vector<std::uint64_t> odo(m, 0);
    parts.assign(m, {});
    part_keys.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
      uni.lists.decode(0, parts[i]);
      keys_of(parts[i], part_keys[i]);
    }
    while (true) {
      if (++scanned > options.budget) {
        throw BudgetExceededError("meta-list scan exceeded the budget");
      }
      std::vector<std::uint32_t> concat_ids;
      for (const auto& ids : parts) {
        concat_ids.insert(concat_ids.end(), ids.begin(), ids.end());
      }
      keys_of(concat_ids, kc);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (u == v) continue;
          const auto cc = cmp(kc[u], kc[v]);
          bool all_le = true;
          bool all_gt = true;
          for (std::size_t i = 0; i < m; ++i) {
            const auto ci = cmp(part_keys[i][u], part_keys[i][v]);
            all_le = all_le && ci <= 0;
            all_gt = all_gt && ci > 0;
          }
          if (k == 5 && all_le && cc > 0) {
            Verdict verdict;
            verdict.status = VerdictStatus::kViolated;
            verdict.witness = make_witness(parts, u, v);
            return verdict;
          }
          if (k == 6 && cc <= 0 && all_gt) {
            Verdict verdict;
            verdict.status = VerdictStatus::kViolated;
            verdict.witness = make_witness(parts, u, v);
            return verdict;
          }
        }
      }
      std::size_t pos = m;
      while (pos > 0) {
        --pos;
        if (++odo[pos] < L) {
          uni.lists.decode(odo[pos], parts[pos]);
          keys_of(parts[pos], part_keys[pos]);
          break;
        }
        odo[pos] = 0;
        uni.lists.decode(0, parts[pos]);
        keys_of(parts[pos], part_keys[pos]);
        if (pos == 0) return Verdict{};
      }
    }
  }
  return Verdict{};
}

}  // namespace

Verdict check_E(int k, OperatorId op, const SearchBounds& bounds,
                const CheckOptions& options) {
  if (k < 1 || k > 6) throw Error("E postulates are numbered 1 to 6");
  if (k <= 4) return check_pointwise_E(k, op, bounds, options);
  return check_meta_E(k, op, bounds, options);
}

Verdict check_unit(OperatorId op, const SearchBounds& bounds,
                   const CheckOptions& options) {
  return check_pointwise_E(0, op, bounds, options);  // 0 selects Unit
}

Verdict check_comm(OperatorId op, const SearchBounds& bounds,
                   const CheckOptions& options) {
  const EUniverse uni = make_e_universe(bounds, options);
  const MergeOptions mopts = merge_options(options);

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    // Every list is element-equivalent exactly to its permutations;
    // comparing each list against its sorted canonical form covers every
    // equivalent pair transitively.
    std::vector<std::uint32_t> canonical = ids;
    std::sort(canonical.begin(), canonical.end());
    if (canonical == ids) return {};
    const EpistemicList E1 = list_from_ids(uni, ids);
    const EpistemicList E2 = list_from_ids(uni, canonical);
    const EpistemicState m1 = merge(op, E1, mopts);
    const EpistemicState m2 = merge(op, E2, mopts);
    for (std::size_t u = 0; u < uni.n_interps; ++u) {
      if (m1.ranks()[u] != m2.ranks()[u]) {
        Witness w;
        w.epistemic_lists = {E1, E2};
        w.u = Interpretation(static_cast<std::uint32_t>(u));
        w.note = "element-equivalent lists merge differently";
        return {w, std::nullopt};
      }
    }
    return {};
  };

  return to_verdict(run_outer_scan(uni.lists.total, 1, options, false, fn));
}

Verdict check_arb(OperatorId op, const SearchBounds& bounds,
                  const CheckOptions& options) {
  const EUniverse uni = make_e_universe(bounds, options);
  const MergeOptions mopts = merge_options(options);
  const std::uint64_t n_states = uni.states.size();
  const std::uint64_t reps =
      bounds.rep_bound >= 2 ? bounds.rep_bound - 1 : 0;

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    const EpistemicList E = list_from_ids(uni, ids);
    for (std::uint64_t phi_id = 0; phi_id < n_states; ++phi_id) {
      const EpistemicState& phi = uni.states[phi_id];
      const EpistemicState base = merge(op, E.append_copies(phi, 1), mopts);
      for (std::size_t n = 2; n <= bounds.rep_bound; ++n) {
        const EpistemicState repeated =
            merge(op, E.append_copies(phi, n), mopts);
        for (std::size_t u = 0; u < uni.n_interps; ++u) {
          if (base.ranks()[u] != repeated.ranks()[u]) {
            Witness w;
            w.epistemic_lists = {E};
            w.repeated_state = phi;
            w.repetitions = n;
            w.u = Interpretation(static_cast<std::uint32_t>(u));
            return {w, std::nullopt};
          }
        }
      }
    }
    return {};
  };

  return to_verdict(
      run_outer_scan(uni.lists.total, n_states * std::max<std::uint64_t>(
                                                     reps, 1),
                     options, false, fn));
}

Verdict check_maj(OperatorId op, const SearchBounds& bounds,
                  const CheckOptions& options) {
  const EUniverse uni = make_e_universe(bounds, options);
  const MergeOptions mopts = merge_options(options);
  const std::uint64_t n_states = uni.states.size();
  const std::size_t n = uni.n_interps;

  auto breaking_pair = [&](const EpistemicState& merged,
                           const EpistemicState& phi)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (merged.ranks()[u] <= merged.ranks()[v] &&
            phi.ranks()[u] > phi.ranks()[v]) {
          return std::make_pair(u, v);
        }
      }
    }
    return std::nullopt;
  };

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    const EpistemicList E = list_from_ids(uni, ids);
    for (std::uint64_t phi_id = 0; phi_id < n_states; ++phi_id) {
      const EpistemicState& phi = uni.states[phi_id];
      bool settled = false;
      std::optional<std::pair<std::size_t, std::size_t>> first_break;
      for (std::size_t reps = 1; reps <= bounds.rep_bound; ++reps) {
        const EpistemicState merged =
            merge(op, E.append_copies(phi, reps), mopts);
        auto broken = breaking_pair(merged, phi);
        if (!broken) {
          settled = true;
          break;
        }
        if (reps == 1) first_break = broken;
      }
      if (settled) continue;

      if (repetition_invariant(op)) {
        // The merge is unchanged by further copies, so the pair that
        // breaks the condition at n = 1 breaks it for every n.
        Witness w;
        w.epistemic_lists = {E};
        w.repeated_state = phi;
        w.repetitions = 1;
        w.u = Interpretation(static_cast<std::uint32_t>(first_break->first));
        w.v = Interpretation(static_cast<std::uint32_t>(first_break->second));
        w.note =
            "operator is repetition-invariant; the condition fails at every "
            "repetition count";
        return {w, std::nullopt};
      }
      if (sum_dominated(op)) {
        // Beyond the spread of the base sums, the repeated state's strict
        // preferences are forced; probe that provably sufficient count.
        const std::size_t probe = static_cast<std::size_t>(
            std::max<Rank>(sum_spread(E) + 1, bounds.rep_bound + 1));
        if (majority_condition_holds(op, E.append_copies(phi, probe), phi)) {
          continue;
        }
      }
      Witness w;
      w.epistemic_lists = {E};
      w.repeated_state = phi;
      w.note = "no repetition count up to " +
               std::to_string(bounds.rep_bound) +
               " satisfies the majority condition";
      return {std::nullopt, w};
    }
    return {};
  };

  return to_verdict(
      run_outer_scan(uni.lists.total, n_states, options, true, fn));
}

// ---------------------------------------------------------------------
// Knowledge-base-level checkers
// ---------------------------------------------------------------------

namespace {

Verdict check_kb_pointwise(int k, OperatorId op, const SearchBounds& bounds,
                           const CheckOptions& options) {
  const KbUniverse uni = make_kb_universe(bounds, options);

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    const ModelSet delta =
        delta_models(op, dalal_list_from_ids(uni, ids, 0u, 0), options);

    auto witness = [&](std::string note) {
      Witness w;
      w.knowledge_lists = {kb_list_from_ids(uni, ids)};
      w.note = std::move(note);
      return w;
    };

    switch (k) {
      case 1: {
        if (delta.empty()) {
          return {witness("merged knowledge base is inconsistent"),
                  std::nullopt};
        }
        break;
      }
      case 2: {
        ModelSet joint = uni.model_sets[ids[0]];
        for (std::size_t i = 1; i < ids.size(); ++i) {
          joint &= uni.model_sets[ids[i]];
        }
        if (!joint.empty() && !(delta == joint)) {
          return {witness(
                      "jointly consistent list does not merge to the "
                      "conjunction"),
                  std::nullopt};
        }
        break;
      }
      default: {  // KP3
        std::vector<std::uint32_t> canonical = ids;
        std::sort(canonical.begin(), canonical.end());
        if (canonical == ids) break;
        const ModelSet other = delta_models(
            op, dalal_list_from_ids(uni, canonical, 0u, 0), options);
        if (!(delta == other)) {
          Witness w;
          w.knowledge_lists = {kb_list_from_ids(uni, ids),
                               kb_list_from_ids(uni, canonical)};
          w.note = "element-equivalent lists merge inequivalently";
          return {w, std::nullopt};
        }
        break;
      }
    }
    return {};
  };

  return to_verdict(run_outer_scan(uni.lists.total, 1, options, false, fn));
}

// KP4 is the one knowledge-base postulate that has to be read at the
// epistemic level: through the distance lifting of flat knowledge bases
// the merged models always mix both sides (the nearest counterpart of a
// minimising model is itself minimal), so all operators except the
// positional one satisfy it there, at every bound. Quantifying instead
// over epistemic states whose associated knowledge bases contradict each
// other - including states that rank nothing at 0 - exposes merges that
// side entirely with the first source.
Verdict check_kp4(OperatorId op, const SearchBounds& bounds,
                  const CheckOptions& options) {
  const EUniverse uni = make_e_universe(bounds, options);
  const std::uint64_t n_states = uni.states.size();
  const MergeOptions mopts = merge_options(options);

  auto zero_set = [&](const EpistemicState& s) {
    ModelSet out(uni.n_interps);
    for (std::size_t i = 0; i < s.ranks().size(); ++i) {
      if (s.ranks()[i] == 0) {
        out.insert(Interpretation(static_cast<std::uint32_t>(i)));
      }
    }
    return out;
  };

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    (void)ids;
    const EpistemicState& first = uni.states[outer];
    const ModelSet first_models = zero_set(first);
    for (std::uint64_t second = 0; second < n_states; ++second) {
      if (!(first_models & zero_set(uni.states[second])).empty()) continue;
      const EpistemicList pair{{first, uni.states[second]}};
      const EpistemicState merged = merge(op, pair, mopts);
      if (zero_set(merged).subset_of(first_models)) {
        Witness w;
        w.epistemic_lists = {pair};
        w.note =
            "associated knowledge bases contradict each other, yet the "
            "merge entails the first one";
        return {w, std::nullopt};
      }
    }
    return {};
  };

  return to_verdict(run_outer_scan(n_states, n_states, options, false, fn));
}

Verdict check_kp56(int k, OperatorId op, const SearchBounds& bounds,
                   const CheckOptions& options) {
  const KbUniverse uni = make_kb_universe(bounds, options);
  const std::uint64_t L = uni.lists.total;

  // delta(e) for every list, reused across the pair scan.
  std::vector<ModelSet> deltas;
  deltas.reserve(L);
  {
    std::vector<std::uint32_t> ids;
    for (std::uint64_t id = 0; id < L; ++id) {
      uni.lists.decode(id, ids);
      deltas.push_back(
          delta_models(op, dalal_list_from_ids(uni, ids, 0u, 0), options));
    }
  }

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids1) -> BlockOutcome {
    uni.lists.decode(outer, ids1);
    std::vector<std::uint32_t> ids2;
    std::vector<std::uint32_t> concat;
    for (std::uint64_t inner = 0; inner < L; ++inner) {
      uni.lists.decode(inner, ids2);
      const ModelSet joint = deltas[outer] & deltas[inner];
      if (k == 6 && joint.empty()) continue;
      concat = ids1;
      concat.insert(concat.end(), ids2.begin(), ids2.end());
      const ModelSet merged =
          delta_models(op, dalal_list_from_ids(uni, concat, 0u, 0), options);
      const bool bad =
          k == 5 ? !joint.subset_of(merged) : !merged.subset_of(joint);
      if (bad) {
        Witness w;
        w.knowledge_lists = {kb_list_from_ids(uni, ids1),
                             kb_list_from_ids(uni, ids2)};
        return {w, std::nullopt};
      }
    }
    return {};
  };

  return to_verdict(run_outer_scan(L, L, options, false, fn));
}

}  // namespace

Verdict check_KP(int k, OperatorId op, const SearchBounds& bounds,
                 const CheckOptions& options) {
  switch (k) {
    case 1:
    case 2:
    case 3:
      return check_kb_pointwise(k, op, bounds, options);
    case 4:
      return check_kp4(op, bounds, options);
    case 5:
    case 6:
      return check_kp56(k, op, bounds, options);
    default:
      throw Error("KP postulates are numbered 1 to 6");
  }
}

Verdict check_kb_arb(OperatorId op, const SearchBounds& bounds,
                     const CheckOptions& options) {
  const KbUniverse uni = make_kb_universe(bounds, options);
  const std::uint64_t n_kbs = uni.model_sets.size();
  const std::uint64_t reps =
      bounds.rep_bound >= 2 ? bounds.rep_bound - 1 : 0;

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    for (std::uint32_t phi = 0; phi < n_kbs; ++phi) {
      const ModelSet base =
          delta_models(op, dalal_list_from_ids(uni, ids, phi, 1), options);
      for (std::size_t n = 2; n <= bounds.rep_bound; ++n) {
        const ModelSet repeated =
            delta_models(op, dalal_list_from_ids(uni, ids, phi, n), options);
        if (!(base == repeated)) {
          Witness w;
          w.knowledge_lists = {kb_list_from_ids(uni, ids)};
          w.repeated_kb = canonical_dnf(uni.model_sets[phi], uni.vocab);
          w.repetitions = n;
          return {w, std::nullopt};
        }
      }
    }
    return {};
  };

  return to_verdict(run_outer_scan(
      uni.lists.total, n_kbs * std::max<std::uint64_t>(reps, 1), options,
      false, fn));
}

Verdict check_kb_maj(OperatorId op, const SearchBounds& bounds,
                     const CheckOptions& options) {
  const KbUniverse uni = make_kb_universe(bounds, options);
  const std::uint64_t n_kbs = uni.model_sets.size();

  auto fn = [&](std::uint64_t outer,
                std::vector<std::uint32_t>& ids) -> BlockOutcome {
    uni.lists.decode(outer, ids);
    for (std::uint32_t phi = 0; phi < n_kbs; ++phi) {
      const ModelSet& phi_models = uni.model_sets[phi];
      bool settled = false;
      for (std::size_t n = 1; n <= bounds.rep_bound; ++n) {
        const ModelSet merged =
            delta_models(op, dalal_list_from_ids(uni, ids, phi, n), options);
        if (merged.subset_of(phi_models)) {
          settled = true;
          break;
        }
      }
      if (settled) continue;

      auto make_witness = [&](std::string note) {
        Witness w;
        w.knowledge_lists = {kb_list_from_ids(uni, ids)};
        w.repeated_kb = canonical_dnf(uni.model_sets[phi], uni.vocab);
        w.note = std::move(note);
        return w;
      };

      if (repetition_invariant(op)) {
        return {make_witness(
                    "operator is repetition-invariant; no repetition count "
                    "makes the merge entail the repeated base"),
                std::nullopt};
      }
      if (sum_dominated(op)) {
        const EpistemicList base = dalal_list_from_ids(uni, ids, 0u, 0);
        const std::size_t probe = static_cast<std::size_t>(
            std::max<Rank>(sum_spread(base) + 1, bounds.rep_bound + 1));
        const ModelSet merged = delta_models(
            op, dalal_list_from_ids(uni, ids, phi, probe), options);
        if (merged.subset_of(phi_models)) continue;
      }
      return {std::nullopt,
              make_witness("no repetition count up to " +
                           std::to_string(bounds.rep_bound) +
                           " makes the merge entail the repeated base")};
    }
    return {};
  };

  return to_verdict(
      run_outer_scan(uni.lists.total, n_kbs, options, true, fn));
}

Verdict check_postulate(PostulateId p, OperatorId op,
                        const SearchBounds& bounds,
                        const CheckOptions& options) {
  switch (p) {
    case PostulateId::kE1:
    case PostulateId::kE2:
    case PostulateId::kE3:
    case PostulateId::kE4:
    case PostulateId::kE5:
    case PostulateId::kE6:
      return check_E(static_cast<int>(p) - static_cast<int>(PostulateId::kE1) +
                         1,
                     op, bounds, options);
    case PostulateId::kUnit:
      return check_unit(op, bounds, options);
    case PostulateId::kComm:
      return check_comm(op, bounds, options);
    case PostulateId::kArb:
      return check_arb(op, bounds, options);
    case PostulateId::kMaj:
      return check_maj(op, bounds, options);
    case PostulateId::kKp1:
    case PostulateId::kKp2:
    case PostulateId::kKp3:
    case PostulateId::kKp4:
    case PostulateId::kKp5:
    case PostulateId::kKp6:
      return check_KP(static_cast<int>(p) -
                          static_cast<int>(PostulateId::kKp1) + 1,
                      op, bounds, options);
    case PostulateId::kKbArb:
      return check_kb_arb(op, bounds, options);
    case PostulateId::kKbMaj:
      return check_kb_maj(op, bounds, options);
  }
  throw Error("corrupt postulate id");
}

namespace {

bool multiset_equal_states(const EpistemicList& a, const EpistemicList& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::vector<Rank>> ra, rb;
  for (const EpistemicState& s : a.states()) ra.push_back(s.ranks());
  for (const EpistemicState& s : b.states()) rb.push_back(s.ranks());
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

bool multiset_equal_kbs(const KnowledgeList& a, const KnowledgeList& b) {
  if (a.size() != b.size()) return false;
  auto sets = [](const KnowledgeList& e) {
    std::vector<std::vector<Interpretation>> out;
    for (const Formula& f : e.elements()) {
      out.push_back(models(f).interpretations());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x < y; });
    return out;
  };
  return sets(a) == sets(b);
}

// True iff, at this repetition count, some pair breaks the majority
// condition.
bool majority_breaks(OperatorId op, const EpistemicList& E,
                     const EpistemicState& phi, std::size_t reps,
                     const MergeOptions& mopts) {
  const EpistemicState merged = merge(op, E.append_copies(phi, reps), mopts);
  const std::size_t n = merged.ranks().size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (merged.ranks()[u] <= merged.ranks()[v] &&
          phi.ranks()[u] > phi.ranks()[v]) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool replay_witness(PostulateId p, OperatorId op, const Verdict& verdict,
                    const SearchBounds& bounds, const CheckOptions& options) {
  if (verdict.status == VerdictStatus::kHoldsInBounds) return true;
  const std::optional<Witness>& payload =
      verdict.status == VerdictStatus::kViolated ? verdict.witness
                                                 : verdict.unknown_candidate;
  if (!payload) return false;
  const Witness& w = *payload;
  const MergeOptions mopts = merge_options(options);

  auto merged_of = [&](const EpistemicList& E) { return merge(op, E, mopts); };
  auto delta_of = [&](const KnowledgeList& e) {
    return induced_kb_merge(op, e, mopts).model_set;
  };

  switch (p) {
    case PostulateId::kE1: {
      if (w.epistemic_lists.size() != 1) return false;
      const EpistemicState m = merged_of(w.epistemic_lists[0]);
      return std::none_of(m.ranks().begin(), m.ranks().end(),
                          [](Rank r) { return r == 0; });
    }
    case PostulateId::kE2:
    case PostulateId::kE3:
    case PostulateId::kE4:
    case PostulateId::kUnit: {
      if (w.epistemic_lists.size() != 1 || !w.u || !w.v) return false;
      const EpistemicList& E = w.epistemic_lists[0];
      const EpistemicState m = merged_of(E);
      const Interpretation u = *w.u;
      const Interpretation v = *w.v;
      if (p == PostulateId::kE2) {
        bool uniform = true;
        for (const EpistemicState& s : E.states()) {
          uniform = uniform && s.rank(u) == E.state(0).rank(u);
        }
        return uniform &&
               realized_sequence(E, u, SequenceVariant::kSortedUp) <
                   realized_sequence(E, v, SequenceVariant::kSortedUp) &&
               !(m.rank(u) < m.rank(v));
      }
      if (p == PostulateId::kE3) {
        for (const EpistemicState& s : E.states()) {
          if (s.rank(u) > s.rank(v)) return false;
        }
        return m.rank(u) > m.rank(v);
      }
      if (p == PostulateId::kE4) {
        if (m.rank(u) > m.rank(v)) return false;
        for (const EpistemicState& s : E.states()) {
          if (s.rank(u) <= s.rank(v)) return false;
        }
        return true;
      }
      // Unit
      for (const EpistemicState& s : E.states()) {
        if (s.rank(u) != s.rank(v)) return false;
      }
      return m.rank(u) != m.rank(v);
    }
    case PostulateId::kE5:
    case PostulateId::kE6: {
      if (w.epistemic_lists.size() < 2 || !w.u || !w.v) return false;
      const Interpretation u = *w.u;
      const Interpretation v = *w.v;
      EpistemicList concat = w.epistemic_lists[0];
      for (std::size_t i = 1; i < w.epistemic_lists.size(); ++i) {
        concat = concat.concat(w.epistemic_lists[i]);
      }
      const EpistemicState mc = merged_of(concat);
      bool all_le = true;
      bool all_gt = true;
      for (const EpistemicList& E : w.epistemic_lists) {
        const EpistemicState m = merged_of(E);
        all_le = all_le && m.rank(u) <= m.rank(v);
        all_gt = all_gt && m.rank(u) > m.rank(v);
      }
      if (p == PostulateId::kE5) {
        return all_le && mc.rank(u) > mc.rank(v);
      }
      return mc.rank(u) <= mc.rank(v) && all_gt;
    }
    case PostulateId::kComm: {
      if (w.epistemic_lists.size() != 2) return false;
      const EpistemicList& a = w.epistemic_lists[0];
      const EpistemicList& b = w.epistemic_lists[1];
      return multiset_equal_states(a, b) &&
             !states_equal(merged_of(a), merged_of(b));
    }
    case PostulateId::kArb: {
      if (w.epistemic_lists.size() != 1 || !w.repeated_state ||
          !w.repetitions || !w.u) {
        return false;
      }
      const EpistemicList& E = w.epistemic_lists[0];
      const EpistemicState base =
          merged_of(E.append_copies(*w.repeated_state, 1));
      const EpistemicState repeated =
          merged_of(E.append_copies(*w.repeated_state, *w.repetitions));
      return base.rank(*w.u) != repeated.rank(*w.u);
    }
    case PostulateId::kMaj: {
      if (w.epistemic_lists.size() != 1 || !w.repeated_state) return false;
      const EpistemicList& E = w.epistemic_lists[0];
      // Both the violation and the unsettled candidate claim that every
      // repetition count in bounds leaves the condition broken.
      for (std::size_t reps = 1; reps <= bounds.rep_bound; ++reps) {
        if (!majority_breaks(op, E, *w.repeated_state, reps, mopts)) {
          return false;
        }
      }
      return true;
    }
    case PostulateId::kKp1: {
      if (w.knowledge_lists.size() != 1) return false;
      return delta_of(w.knowledge_lists[0]).empty();
    }
    case PostulateId::kKp2: {
      if (w.knowledge_lists.size() != 1) return false;
      const KnowledgeList& e = w.knowledge_lists[0];
      ModelSet joint = models(e.element(0));
      for (std::size_t i = 1; i < e.size(); ++i) joint &= models(e.element(i));
      return !joint.empty() && !(delta_of(e) == joint);
    }
    case PostulateId::kKp3: {
      if (w.knowledge_lists.size() != 2) return false;
      return multiset_equal_kbs(w.knowledge_lists[0], w.knowledge_lists[1]) &&
             !(delta_of(w.knowledge_lists[0]) ==
               delta_of(w.knowledge_lists[1]));
    }
    case PostulateId::kKp4: {
      if (w.epistemic_lists.size() != 1 || w.epistemic_lists[0].size() != 2) {
        return false;
      }
      const EpistemicList& pair = w.epistemic_lists[0];
      const ModelSet first = knowledge_base(pair.state(0)).model_set;
      const ModelSet second = knowledge_base(pair.state(1)).model_set;
      if (!(first & second).empty()) return false;
      return knowledge_base(merged_of(pair)).model_set.subset_of(first);
    }
    case PostulateId::kKp5:
    case PostulateId::kKp6: {
      if (w.knowledge_lists.size() != 2) return false;
      const ModelSet d1 = delta_of(w.knowledge_lists[0]);
      const ModelSet d2 = delta_of(w.knowledge_lists[1]);
      const ModelSet dc =
          delta_of(w.knowledge_lists[0].concat(w.knowledge_lists[1]));
      const ModelSet joint = d1 & d2;
      if (p == PostulateId::kKp5) return !joint.subset_of(dc);
      return !joint.empty() && !dc.subset_of(joint);
    }
    case PostulateId::kKbArb: {
      if (w.knowledge_lists.size() != 1 || !w.repeated_kb || !w.repetitions) {
        return false;
      }
      const KnowledgeList& e = w.knowledge_lists[0];
      const ModelSet base = delta_of(e.append_copies(*w.repeated_kb, 1));
      const ModelSet repeated =
          delta_of(e.append_copies(*w.repeated_kb, *w.repetitions));
      return !(base == repeated);
    }
    case PostulateId::kKbMaj: {
      if (w.knowledge_lists.size() != 1 || !w.repeated_kb) return false;
      const KnowledgeList& e = w.knowledge_lists[0];
      const ModelSet phi_models = models(*w.repeated_kb);
      for (std::size_t reps = 1; reps <= bounds.rep_bound; ++reps) {
        if (delta_of(e.append_copies(*w.repeated_kb, reps))
                .subset_of(phi_models)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

const Verdict& SatisfactionMatrix::at(OperatorId op, PostulateId p) const {
  for (const MatrixCell& cell : cells) {
    if (cell.op == op && cell.postulate == p) return cell.verdict;
  }
  throw Error("matrix has no such cell");
}

SatisfactionMatrix satisfaction_matrix(const SearchBounds& bounds,
                                       const CheckOptions& options) {
  SatisfactionMatrix matrix;
  matrix.bounds = bounds;
  for (OperatorId op : kAllOperators) {
    for (PostulateId p : kAllPostulates) {
      matrix.cells.push_back(
          MatrixCell{op, p, check_postulate(p, op, bounds, options)});
    }
  }
  return matrix;
}

}  // namespace rankmerge
