#include "rankmerge/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "rankmerge/errors.hpp"

namespace rankmerge {

namespace {

enum class TokenKind {
  kIdent,
  kTrue,
  kFalse,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '~':
        tokens.push_back({TokenKind::kNot, "~", start});
        ++i;
        continue;
      case '&':
        tokens.push_back({TokenKind::kAnd, "&", start});
        ++i;
        continue;
      case '|':
        tokens.push_back({TokenKind::kOr, "|", start});
        ++i;
        continue;
      case '(':
        tokens.push_back({TokenKind::kLParen, "(", start});
        ++i;
        continue;
      case ')':
        tokens.push_back({TokenKind::kRParen, ")", start});
        ++i;
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          tokens.push_back({TokenKind::kImplies, "->", start});
          i += 2;
          continue;
        }
        throw ParseError("expected '->'", start);
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          tokens.push_back({TokenKind::kIff, "<->", start});
          i += 3;
          continue;
        }
        throw ParseError("expected '<->'", start);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = i;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) ||
              text[end] == '_')) {
        ++end;
      }
      std::string word(text.substr(i, end - i));
      if (word == "true") {
        tokens.push_back({TokenKind::kTrue, word, start});
      } else if (word == "false") {
        tokens.push_back({TokenKind::kFalse, word, start});
      } else {
        tokens.push_back({TokenKind::kIdent, word, start});
      }
      i = end;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  tokens.push_back({TokenKind::kEnd, "", text.size()});
  return tokens;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary& vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  Formula run() {
    Formula f = parse_iff();
    expect(TokenKind::kEnd, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(TokenKind kind, const std::string& message) {
    if (peek().kind != kind) throw ParseError(message, peek().position);
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(TokenKind::kIff)) {
      return Formula::biconditional(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept(TokenKind::kImplies)) {
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(TokenKind::kOr)) {
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(TokenKind::kAnd)) {
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (accept(TokenKind::kNot)) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    const Token token = advance();
    switch (token.kind) {
      case TokenKind::kTrue:
        return Formula::constant(vocab_, true);
      case TokenKind::kFalse:
        return Formula::constant(vocab_, false);
      case TokenKind::kIdent: {
        auto index = vocab_.atom_index(token.text);
        if (!index) throw UnknownAtomError(token.text, token.position);
        return Formula::atom(vocab_, *index);
      }
      case TokenKind::kLParen: {
        Formula f = parse_iff();
        expect(TokenKind::kRParen, "expected ')'");
        ++pos_;
        return f;
      }
      case TokenKind::kEnd:
        throw ParseError("unexpected end of input", token.position);
      default:
        throw ParseError("unexpected token '" + token.text + "'",
                         token.position);
    }
  }

  std::vector<Token> tokens_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(tokenize(text), vocab).run();
}

}  // namespace rankmerge
