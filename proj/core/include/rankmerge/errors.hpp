#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankmerge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (formula grammar, state files). Carries the
/// zero-based character offset at which the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A formula references an atom that is not part of the vocabulary.
class UnknownAtomError : public ParseError {
 public:
  UnknownAtomError(const std::string& atom, std::size_t position)
      : ParseError("unknown atom '" + atom + "'", position), atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// Two values built over different vocabularies were combined.
class VocabularyMismatchError : public Error {
 public:
  using Error::Error;
};

/// A knowledge base with an empty model set was used where a consistent
/// one is required (e.g. as the source of a distance-based state).
class InconsistentKbError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a non-empty list received an empty one.
class EmptyListError : public Error {
 public:
  using Error::Error;
};

/// A sequence was ranked against a candidate space it does not belong to.
class SequenceNotInSpaceError : public Error {
 public:
  using Error::Error;
};

/// A candidate sequence space is too large to enumerate under the
/// configured limit.
class SpaceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// A postulate check would scan more instances than its budget allows.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit rank arithmetic overflowed. Ranks never wrap silently.
class RankOverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankmerge
