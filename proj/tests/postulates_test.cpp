#include <doctest.h>

#include "rankmerge/errors.hpp"
#include "rankmerge/parser.hpp"
#include "rankmerge/postulates.hpp"
#include "rankmerge/text_io.hpp"

#include "helpers.hpp"

using namespace rankmerge;
using testutil::pq;

namespace {

// Small bounds keep the unit suite quick; the acceptance suite runs the
// full desk-scale bounds.
const SearchBounds kTiny{2, 1, 2, 2, 2};

std::string witness_fingerprint(const Witness& w) {
  std::string out;
  for (const EpistemicList& E : w.epistemic_lists) {
    for (const EpistemicState& s : E.states()) out += format_state(s);
  }
  if (w.repeated_state) out += format_state(*w.repeated_state);
  for (const KnowledgeList& e : w.knowledge_lists) {
    for (const Formula& f : e.elements()) out += f.to_string() + ";";
  }
  if (w.repeated_kb) out += w.repeated_kb->to_string();
  if (w.u) out += "u" + std::to_string(w.u->index());
  if (w.v) out += "v" + std::to_string(w.v->index());
  if (w.repetitions) out += "n" + std::to_string(*w.repetitions);
  return out;
}

}  // namespace

TEST_CASE("postulate names") {
  CHECK(postulate_name(PostulateId::kE3) == "E3");
  CHECK(postulate_name(PostulateId::kKbArb) == "arb");
  CHECK(postulate_from_name("Maj") == PostulateId::kMaj);
  CHECK(postulate_from_name("maj") == PostulateId::kKbMaj);
  CHECK(postulate_from_name("arb") == PostulateId::kKbArb);
  CHECK(!postulate_from_name("E7"));
  CHECK(!postulate_from_name("unit"));  // case-sensitive
}

TEST_CASE("state enumeration") {
  CHECK(enumerate_states({1, 1, 1, 1, 1}).size() == 4);
  CHECK(enumerate_states({2, 2, 2, 2, 2}).size() == 81);
  CHECK(enumerate_states({2, 0, 1, 1, 1}).size() == 1);
  CHECK_THROWS_AS(enumerate_states({2, 2, 2, 2, 2}, CheckOptions{10}),
                  BudgetExceededError);

  const Vocabulary v = default_vocabulary(3);
  CHECK(v.atoms() == std::vector<std::string>{"p", "q", "r"});
  CHECK_THROWS_AS(default_vocabulary(0), Error);
  CHECK_THROWS_AS(default_vocabulary(17), Error);
}

TEST_CASE("knowledge lists") {
  const Vocabulary v = pq();
  CHECK_THROWS_AS(KnowledgeList({}), EmptyListError);
  CHECK_THROWS_AS(KnowledgeList({parse("p & ~p", v)}), InconsistentKbError);

  const KnowledgeList e({parse("p", v), parse("q", v)});
  CHECK(e.size() == 2);
  CHECK(e.concat(e).size() == 4);
  CHECK(e.append_copies(parse("p", v), 2).size() == 4);
}

TEST_CASE("induced knowledge-base merge") {
  const Vocabulary v = pq();
  const KnowledgeList single({parse("p -> q", v)});
  for (OperatorId op : kAllOperators) {
    if (op == OperatorId::kCons) continue;  // flattens singletons: d is 0
    CHECK(induced_kb_merge(op, single).model_set ==
          models(parse("p -> q", v)));
  }
  // The pure consensus merge of a single state ranks everything 0.
  CHECK(induced_kb_merge(OperatorId::kCons, single).model_set.full());

  // Jointly consistent lists merge to the conjunction for every operator
  // that rewards unanimous minima (all but the two consensus ones).
  for (unsigned m1 = 1; m1 < 16; ++m1) {
    for (unsigned m2 = 1; m2 < 16; ++m2) {
      if ((m1 & m2) == 0) continue;
      ModelSet a(4), b(4), both(4);
      for (unsigned i = 0; i < 4; ++i) {
        if (m1 & (1u << i)) a.insert(v.interpretation(i));
        if (m2 & (1u << i)) b.insert(v.interpretation(i));
        if ((m1 & m2) & (1u << i)) both.insert(v.interpretation(i));
      }
      const KnowledgeList e({canonical_dnf(a, v), canonical_dnf(b, v)});
      for (OperatorId op :
           {OperatorId::kLs, OperatorId::kRls, OperatorId::kMax,
            OperatorId::kGmax, OperatorId::kSigma, OperatorId::kRsigma,
            OperatorId::kLex}) {
        CHECK(induced_kb_merge(op, e).model_set == both);
      }
    }
  }
}

TEST_CASE("E1 holds for every operator") {
  for (OperatorId op : kAllOperators) {
    const Verdict v = check_E(1, op, kTiny);
    CHECK(v.status == VerdictStatus::kHoldsInBounds);
  }
}

TEST_CASE("E3: the consensus operators fail, the sum operator does not") {
  const Verdict bad = check_E(3, OperatorId::kCons, kTiny);
  REQUIRE(bad.status == VerdictStatus::kViolated);
  REQUIRE(bad.witness.has_value());
  CHECK(replay_witness(PostulateId::kE3, OperatorId::kCons, bad, kTiny));

  // The refined consensus merge needs a rank spread of two to go wrong.
  const SearchBounds wider{2, 2, 2, 2, 2};
  const Verdict bad2 = check_E(4, OperatorId::kRcons, wider);
  REQUIRE(bad2.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kE4, OperatorId::kRcons, bad2, wider));

  CHECK(check_E(3, OperatorId::kSigma, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
  CHECK(check_unit(OperatorId::kCons, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
}

TEST_CASE("commutativity: lex fails with a replayable pair") {
  const Verdict bad = check_comm(OperatorId::kLex, kTiny);
  REQUIRE(bad.status == VerdictStatus::kViolated);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->epistemic_lists.size() == 2);
  CHECK(replay_witness(PostulateId::kComm, OperatorId::kLex, bad, kTiny));

  CHECK(check_comm(OperatorId::kSigma, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
}

TEST_CASE("arbitration") {
  CHECK(check_arb(OperatorId::kMax, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
  CHECK(check_arb(OperatorId::kLs, kTiny).status ==
        VerdictStatus::kHoldsInBounds);

  const SearchBounds bounds{2, 2, 2, 3, 2};
  const Verdict bad = check_arb(OperatorId::kRls, bounds);
  REQUIRE(bad.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kArb, OperatorId::kRls, bad, bounds));

  const Verdict bad2 = check_arb(OperatorId::kSigma, kTiny);
  REQUIRE(bad2.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kArb, OperatorId::kSigma, bad2, kTiny));
}

TEST_CASE("majority") {
  // Sum-dominated operators settle every instance.
  CHECK(check_maj(OperatorId::kSigma, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
  CHECK(check_maj(OperatorId::kRsigma, kTiny).status ==
        VerdictStatus::kHoldsInBounds);

  // Repetition-invariant operators refute outright.
  const Verdict ls = check_maj(OperatorId::kLs, kTiny);
  REQUIRE(ls.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kMaj, OperatorId::kLs, ls, kTiny));

  // The refined variant has no finite refutation: unsettled instance.
  const SearchBounds bounds{2, 2, 2, 3, 2};
  const Verdict rls = check_maj(OperatorId::kRls, bounds);
  REQUIRE(rls.status == VerdictStatus::kUnknown);
  CHECK(!rls.witness.has_value());
  REQUIRE(rls.unknown_candidate.has_value());
  CHECK(replay_witness(PostulateId::kMaj, OperatorId::kRls, rls, bounds));
}

TEST_CASE("knowledge-base postulates") {
  for (OperatorId op : {OperatorId::kMax, OperatorId::kLex}) {
    CHECK(check_KP(1, op, kTiny).status == VerdictStatus::kHoldsInBounds);
    CHECK(check_KP(2, op, kTiny).status == VerdictStatus::kHoldsInBounds);
  }
  // KP3 is commutativity at the knowledge-base level, so the positional
  // operator fails it and the rest keep it.
  CHECK(check_KP(3, OperatorId::kMax, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
  const Verdict kp3 = check_KP(3, OperatorId::kLex, kTiny);
  REQUIRE(kp3.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kKp3, OperatorId::kLex, kp3, kTiny));

  // KP4 fails for every operator once states may rank each other's models.
  for (OperatorId op : kAllOperators) {
    const Verdict bad = check_KP(4, op, kTiny);
    REQUIRE(bad.status == VerdictStatus::kViolated);
    CHECK(replay_witness(PostulateId::kKp4, op, bad, kTiny));
  }

  CHECK(check_KP(5, OperatorId::kSigma, kTiny).status ==
        VerdictStatus::kHoldsInBounds);
  CHECK(check_KP(6, OperatorId::kGmax, kTiny).status ==
        VerdictStatus::kHoldsInBounds);

  const Verdict kp6 = check_KP(6, OperatorId::kMax, kTiny);
  REQUIRE(kp6.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kKp6, OperatorId::kMax, kp6, kTiny));

  CHECK_THROWS_AS(check_KP(7, OperatorId::kMax, kTiny), Error);
  CHECK_THROWS_AS(check_E(0, OperatorId::kMax, kTiny), Error);
}

TEST_CASE("knowledge-base arbitration and majority") {
  CHECK(check_kb_maj(OperatorId::kSigma, kTiny).status ==
        VerdictStatus::kHoldsInBounds);

  const Verdict arb = check_kb_arb(OperatorId::kSigma, kTiny);
  REQUIRE(arb.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kKbArb, OperatorId::kSigma, arb, kTiny));

  CHECK(check_kb_arb(OperatorId::kMax, kTiny).status ==
        VerdictStatus::kHoldsInBounds);

  const Verdict maj = check_kb_maj(OperatorId::kMax, kTiny);
  REQUIRE(maj.status == VerdictStatus::kViolated);
  CHECK(replay_witness(PostulateId::kKbMaj, OperatorId::kMax, maj, kTiny));
}

TEST_CASE("E5 implies KP5, verdict level") {
  for (OperatorId op : kAllOperators) {
    const bool e5_holds =
        check_E(5, op, kTiny).status == VerdictStatus::kHoldsInBounds;
    const bool kp5_violated =
        check_KP(5, op, kTiny).status == VerdictStatus::kViolated;
    CHECK(!(e5_holds && kp5_violated));
  }
}

TEST_CASE("budget semantics") {
  CheckOptions starved;
  starved.budget = 1;
  CHECK_THROWS_AS(check_KP(4, OperatorId::kLex, kTiny, starved),
                  BudgetExceededError);

  // A budget that covers the prefix holding the first witness still
  // yields the violation.
  CheckOptions prefix_only;
  prefix_only.budget = 16;  // one outer state, sixteen partners
  const Verdict v = check_KP(4, OperatorId::kLex, kTiny, prefix_only);
  CHECK(v.status == VerdictStatus::kViolated);
}

TEST_CASE("verdicts and witnesses are deterministic across runs") {
  const SearchBounds bounds{2, 2, 2, 3, 2};
  CheckOptions four_threads;
  four_threads.threads = 4;
  CheckOptions one_thread;
  one_thread.threads = 1;

  const Verdict a = check_E(3, OperatorId::kCons, bounds, four_threads);
  const Verdict b = check_E(3, OperatorId::kCons, bounds, one_thread);
  REQUIRE(a.status == VerdictStatus::kViolated);
  REQUIRE(b.status == VerdictStatus::kViolated);
  CHECK(witness_fingerprint(*a.witness) == witness_fingerprint(*b.witness));

  const Verdict c = check_comm(OperatorId::kLex, bounds, four_threads);
  const Verdict d = check_comm(OperatorId::kLex, bounds, one_thread);
  CHECK(witness_fingerprint(*c.witness) == witness_fingerprint(*d.witness));
}

TEST_CASE("malformed witnesses do not replay") {
  Verdict fake;
  fake.status = VerdictStatus::kViolated;
  fake.witness = Witness{};
  for (PostulateId p : kAllPostulates) {
    CHECK(!replay_witness(p, OperatorId::kMax, fake, kTiny));
  }
}

TEST_CASE("small satisfaction matrix with full witness replay") {
  const SearchBounds bounds{1, 1, 2, 2, 2};
  const SatisfactionMatrix matrix = satisfaction_matrix(bounds);
  CHECK(matrix.cells.size() == kAllOperators.size() * kAllPostulates.size());
  for (const MatrixCell& cell : matrix.cells) {
    if (cell.verdict.status == VerdictStatus::kViolated) {
      CHECK(cell.verdict.witness.has_value());
      CHECK(!cell.verdict.unknown_candidate.has_value());
      CHECK(replay_witness(cell.postulate, cell.op, cell.verdict, bounds));
    }
    if (cell.verdict.status == VerdictStatus::kUnknown) {
      CHECK(cell.verdict.unknown_candidate.has_value());
      CHECK(!cell.verdict.witness.has_value());
      CHECK(replay_witness(cell.postulate, cell.op, cell.verdict, bounds));
    }
    if (cell.postulate == PostulateId::kE1) {
      CHECK(cell.verdict.status == VerdictStatus::kHoldsInBounds);
    }
  }
  CHECK(matrix.at(OperatorId::kMax, PostulateId::kE1).status ==
        VerdictStatus::kHoldsInBounds);
  CHECK_THROWS_AS(
      (void)SatisfactionMatrix{}.at(OperatorId::kMax, PostulateId::kE1),
      Error);
}
