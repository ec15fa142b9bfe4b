#include "rankmerge/model_set.hpp"

#include <algorithm>

#include "rankmerge/errors.hpp"

namespace rankmerge {

std::size_t ModelSet::count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), true));
}

void ModelSet::require_same_universe(const ModelSet& other) const {
  if (universe_size() != other.universe_size()) {
    throw VocabularyMismatchError("model sets over different universes");
  }
}

bool ModelSet::subset_of(const ModelSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] = bits_[i] && other.bits_[i];
  }
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] = bits_[i] || other.bits_[i];
  }
  return *this;
}

ModelSet ModelSet::complement() const {
  ModelSet out(universe_size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

std::vector<Interpretation> ModelSet::interpretations() const {
  std::vector<Interpretation> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(Interpretation(static_cast<std::uint32_t>(i)));
  }
  return out;
}

}  // namespace rankmerge
