#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankmerge {

/// One truth assignment, identified by its index in the fixed enumeration
/// of all 2^n assignments of a vocabulary. The binary representation of
/// the index, padded to n digits, is the display string of the
/// interpretation: the first (most significant) digit is the truth value
/// of the first declared atom.
class Interpretation {
 public:
  constexpr explicit Interpretation(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }

  friend constexpr auto operator<=>(Interpretation, Interpretation) = default;

 private:
  std::uint32_t index_;
};

/// An ordered set of distinct atom names. The order is fixed on
/// construction and determines both the interpretation enumeration and
/// the display convention. Copies are cheap; the atom list is shared.
class Vocabulary {
 public:
  static constexpr std::size_t kDefaultMaxAtoms = 16;

  /// Throws Error if the list is empty, exceeds max_atoms, contains a
  /// duplicate, or contains a name that is not an identifier (or is one
  /// of the reserved words `true` / `false`).
  explicit Vocabulary(std::vector<std::string> atoms,
                      std::size_t max_atoms = kDefaultMaxAtoms);

  std::size_t atom_count() const;
  std::size_t interpretation_count() const;  // 2^atom_count

  const std::string& atom_name(std::size_t atom) const;
  const std::vector<std::string>& atoms() const;
  std::optional<std::size_t> atom_index(std::string_view name) const;

  /// Truth value of the given atom under interpretation u. Atom 0 is the
  /// most significant bit of the interpretation index.
  bool truth(Interpretation u, std::size_t atom) const;

  /// Bounds-checked construction from a raw index.
  Interpretation interpretation(std::uint64_t index) const;

  /// Display string, e.g. "10" for p true, q false over {p, q}.
  std::string bits(Interpretation u) const;

  /// Parses a display string ("10") back into an interpretation.
  Interpretation interpretation_from_bits(std::string_view bits) const;

  /// All interpretations in index order.
  std::vector<Interpretation> interpretations() const;

  bool operator==(const Vocabulary& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// True iff the name matches [A-Za-z_][A-Za-z0-9_]* and is not a
/// reserved constant.
bool is_valid_atom_name(std::string_view name);

}  // namespace rankmerge
