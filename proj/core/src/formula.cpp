#include "rankmerge/formula.hpp"

#include <bit>
#include <limits>
#include <vector>

#include "rankmerge/errors.hpp"

namespace rankmerge {

struct Formula::Node {
  Connective kind;
  std::size_t atom_index = 0;
  std::vector<Formula> children;
};

Formula::Formula(Vocabulary vocab, std::shared_ptr<const Node> node)
    : vocab_(std::move(vocab)), node_(std::move(node)) {}

Formula Formula::constant(const Vocabulary& vocab, bool value) {
  auto node = std::make_shared<Node>();
  node->kind = value ? Connective::kTrue : Connective::kFalse;
  return Formula(vocab, std::move(node));
}

Formula Formula::atom(const Vocabulary& vocab, std::size_t atom_index) {
  if (atom_index >= vocab.atom_count()) {
    throw Error("atom index " + std::to_string(atom_index) +
                " out of range");
  }
  auto node = std::make_shared<Node>();
  node->kind = Connective::kAtom;
  node->atom_index = atom_index;
  return Formula(vocab, std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::kNot;
  Vocabulary vocab = operand.vocab();
  node->children.push_back(std::move(operand));
  return Formula(std::move(vocab), std::move(node));
}

#define RANKMERGE_DEFINE_BINARY(NAME, KIND)                            \
  Formula Formula::NAME(Formula lhs, Formula rhs) {                    \
    if (!(lhs.vocab() == rhs.vocab())) {                               \
      throw VocabularyMismatchError(                                   \
          "cannot combine formulas over different vocabularies");      \
    }                                                                  \
    auto node = std::make_shared<Node>();                              \
    node->kind = Connective::KIND;                                     \
    Vocabulary vocab = lhs.vocab();                                    \
    node->children.push_back(std::move(lhs));                          \
    node->children.push_back(std::move(rhs));                          \
    return Formula(std::move(vocab), std::move(node));                 \
  }

RANKMERGE_DEFINE_BINARY(conjunction, kAnd)
RANKMERGE_DEFINE_BINARY(disjunction, kOr)
RANKMERGE_DEFINE_BINARY(implication, kImplies)
RANKMERGE_DEFINE_BINARY(biconditional, kIff)

#undef RANKMERGE_DEFINE_BINARY

Connective Formula::connective() const { return node_->kind; }

std::size_t Formula::atom_index() const {
  if (node_->kind != Connective::kAtom) {
    throw Error("atom_index on a non-atom formula");
  }
  return node_->atom_index;
}

const Formula& Formula::operand() const {
  if (node_->kind != Connective::kNot) {
    throw Error("operand on a non-negation formula");
  }
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) {
    throw Error("lhs on a non-binary formula");
  }
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) {
    throw Error("rhs on a non-binary formula");
  }
  return node_->children[1];
}

bool Formula::evaluate(Interpretation u) const {
  switch (node_->kind) {
    case Connective::kTrue:
      return true;
    case Connective::kFalse:
      return false;
    case Connective::kAtom:
      return vocab_.truth(u, node_->atom_index);
    case Connective::kNot:
      return !operand().evaluate(u);
    case Connective::kAnd:
      return lhs().evaluate(u) && rhs().evaluate(u);
    case Connective::kOr:
      return lhs().evaluate(u) || rhs().evaluate(u);
    case Connective::kImplies:
      return !lhs().evaluate(u) || rhs().evaluate(u);
    case Connective::kIff:
      return lhs().evaluate(u) == rhs().evaluate(u);
  }
  throw Error("corrupt formula node");
}

namespace {

// Binding strength, loosest first. Used by the printer to decide where
// parentheses are required.
int precedence(Connective c) {
  switch (c) {
    case Connective::kIff:
      return 0;
    case Connective::kImplies:
      return 1;
    case Connective::kOr:
      return 2;
    case Connective::kAnd:
      return 3;
    case Connective::kNot:
      return 4;
    default:
      return 5;  // atoms and constants
  }
}

bool is_binary(Connective c) {
  return c == Connective::kAnd || c == Connective::kOr ||
         c == Connective::kImplies || c == Connective::kIff;
}

void print(const Formula& f, std::string& out, int parent_prec,
           bool assoc_hole) {
  const Connective c = f.connective();
  const int prec = precedence(c);
  // A child needs parentheses when it binds more loosely than its parent,
  // or equally loosely on the side the parent's associativity does not
  // cover.
  bool need_parens = is_binary(c) && (prec < parent_prec ||
                                      (prec == parent_prec && !assoc_hole));
  if (need_parens) out += '(';
  switch (c) {
    case Connective::kTrue:
      out += "true";
      break;
    case Connective::kFalse:
      out += "false";
      break;
    case Connective::kAtom:
      out += f.vocab().atom_name(f.atom_index());
      break;
    case Connective::kNot:
      out += '~';
      print(f.operand(), out, precedence(Connective::kNot), false);
      break;
    case Connective::kAnd:
    case Connective::kOr: {
      print(f.lhs(), out, prec, true);  // left-associative
      out += c == Connective::kAnd ? " & " : " | ";
      print(f.rhs(), out, prec, false);
      break;
    }
    case Connective::kImplies:
    case Connective::kIff: {
      print(f.lhs(), out, prec, false);  // right-associative
      out += c == Connective::kImplies ? " -> " : " <-> ";
      print(f.rhs(), out, prec, true);
      break;
    }
  }
  if (need_parens) out += ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out, -1, false);
  return out;
}

ModelSet models(const Formula& f) {
  const Vocabulary& vocab = f.vocab();
  const std::size_t n = vocab.interpretation_count();
  switch (f.connective()) {
    case Connective::kTrue: {
      ModelSet all(n);
      return all.complement();
    }
    case Connective::kFalse:
      return ModelSet(n);
    case Connective::kAtom: {
      ModelSet out(n);
      for (std::size_t i = 0; i < n; ++i) {
        Interpretation u(static_cast<std::uint32_t>(i));
        if (vocab.truth(u, f.atom_index())) out.insert(u);
      }
      return out;
    }
    case Connective::kNot:
      return models(f.operand()).complement();
    case Connective::kAnd:
      return models(f.lhs()) & models(f.rhs());
    case Connective::kOr:
      return models(f.lhs()) | models(f.rhs());
    case Connective::kImplies:
      return models(f.lhs()).complement() | models(f.rhs());
    case Connective::kIff: {
      ModelSet l = models(f.lhs());
      ModelSet r = models(f.rhs());
      return (l & r) | (l.complement() & r.complement());
    }
  }
  throw Error("corrupt formula node");
}

bool entails(const Formula& f, const Formula& g) {
  if (!(f.vocab() == g.vocab())) {
    throw VocabularyMismatchError(
        "entailment between formulas over different vocabularies");
  }
  return models(f).subset_of(models(g));
}

bool is_consistent(const Formula& f) { return !models(f).empty(); }

bool is_tautology(const Formula& f) { return models(f).full(); }

unsigned dist(Interpretation u, Interpretation v) {
  return static_cast<unsigned>(std::popcount(u.index() ^ v.index()));
}

unsigned dist(const Formula& f, Interpretation u) {
  unsigned best = std::numeric_limits<unsigned>::max();
  const ModelSet m = models(f);
  for (std::size_t i = 0; i < m.universe_size(); ++i) {
    Interpretation v(static_cast<std::uint32_t>(i));
    if (m.contains(v)) best = std::min(best, dist(u, v));
  }
  if (best == std::numeric_limits<unsigned>::max()) {
    throw InconsistentKbError(
        "distance from an inconsistent knowledge base is undefined");
  }
  return best;
}

Formula canonical_dnf(const ModelSet& model_set, const Vocabulary& vocab) {
  if (model_set.universe_size() != vocab.interpretation_count()) {
    throw VocabularyMismatchError("model set does not match vocabulary");
  }
  std::optional<Formula> out;
  for (Interpretation u : model_set.interpretations()) {
    std::optional<Formula> minterm;
    for (std::size_t a = 0; a < vocab.atom_count(); ++a) {
      Formula lit = Formula::atom(vocab, a);
      if (!vocab.truth(u, a)) lit = Formula::negation(std::move(lit));
      minterm = minterm ? Formula::conjunction(std::move(*minterm),
                                               std::move(lit))
                        : std::move(lit);
    }
    out = out ? Formula::disjunction(std::move(*out), std::move(*minterm))
              : std::move(*minterm);
  }
  return out ? std::move(*out) : Formula::constant(vocab, false);
}

}  // namespace rankmerge
