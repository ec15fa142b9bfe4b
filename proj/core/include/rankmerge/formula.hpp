#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "rankmerge/model_set.hpp"
#include "rankmerge/vocabulary.hpp"

namespace rankmerge {

enum class Connective : std::uint8_t {
  kTrue,
  kFalse,
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
};

/// Immutable propositional formula over a fixed vocabulary. Copies share
/// structure. Every constructor validates that the operands belong to the
/// same vocabulary.
class Formula {
 public:
  static Formula constant(const Vocabulary& vocab, bool value);
  static Formula atom(const Vocabulary& vocab, std::size_t atom_index);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  const Vocabulary& vocab() const { return vocab_; }
  Connective connective() const;

  std::size_t atom_index() const;  // kAtom only
  const Formula& operand() const;  // kNot only
  const Formula& lhs() const;      // binary connectives
  const Formula& rhs() const;

  /// Classical truth-table semantics for a single interpretation.
  bool evaluate(Interpretation u) const;

  /// Parseable rendering with minimal parentheses.
  std::string to_string() const;

 private:
  struct Node;
  Formula(Vocabulary vocab, std::shared_ptr<const Node> node);

  Vocabulary vocab_;
  std::shared_ptr<const Node> node_;
};

/// The set of models of f, computed compositionally over the whole
/// universe (bitset per subformula).
ModelSet models(const Formula& f);

/// models(f) included in models(g). Both formulas must share a vocabulary.
bool entails(const Formula& f, const Formula& g);

bool is_consistent(const Formula& f);
bool is_tautology(const Formula& f);

/// Number of atoms on which the two interpretations differ.
unsigned dist(Interpretation u, Interpretation v);

/// Minimum distance from u to any model of f. Throws InconsistentKbError
/// when f has no models.
unsigned dist(const Formula& f, Interpretation u);

/// Disjunction of the minterms of the models of the set, in ascending
/// index order; the constant false for the empty set. This is the byte
/// stable representative used everywhere a formula must be emitted for a
/// model set.
Formula canonical_dnf(const ModelSet& model_set, const Vocabulary& vocab);

}  // namespace rankmerge
