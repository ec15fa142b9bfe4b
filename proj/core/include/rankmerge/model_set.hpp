#pragma once

#include <cstddef>
#include <vector>

#include "rankmerge/vocabulary.hpp"

namespace rankmerge {

/// A set of interpretations, stored as one bit per interpretation of a
/// fixed universe of size 2^n.
class ModelSet {
 public:
  explicit ModelSet(std::size_t universe_size)
      : bits_(universe_size, false) {}

  std::size_t universe_size() const { return bits_.size(); }

  bool contains(Interpretation u) const { return bits_[u.index()]; }
  void insert(Interpretation u) { bits_[u.index()] = true; }
  void erase(Interpretation u) { bits_[u.index()] = false; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool full() const { return count() == universe_size(); }

  bool subset_of(const ModelSet& other) const;

  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet complement() const;

  friend ModelSet operator&(ModelSet lhs, const ModelSet& rhs) {
    lhs &= rhs;
    return lhs;
  }
  friend ModelSet operator|(ModelSet lhs, const ModelSet& rhs) {
    lhs |= rhs;
    return lhs;
  }

  bool operator==(const ModelSet& other) const = default;

  /// Members in ascending index order.
  std::vector<Interpretation> interpretations() const;

 private:
  void require_same_universe(const ModelSet& other) const;

  std::vector<bool> bits_;
};

}  // namespace rankmerge
