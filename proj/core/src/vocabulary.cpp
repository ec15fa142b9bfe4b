#include "rankmerge/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "rankmerge/errors.hpp"

namespace rankmerge {

struct Vocabulary::Impl {
  std::vector<std::string> atoms;
  std::unordered_map<std::string, std::size_t> index_of;
};

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "true" || name == "false") return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Vocabulary::Vocabulary(std::vector<std::string> atoms, std::size_t max_atoms) {
  if (atoms.empty()) throw Error("vocabulary must declare at least one atom");
  if (atoms.size() > max_atoms) {
    throw Error("vocabulary declares " + std::to_string(atoms.size()) +
                " atoms, limit is " + std::to_string(max_atoms));
  }
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string& name = atoms[i];
    if (!is_valid_atom_name(name)) {
      throw Error("invalid atom name '" + name + "'");
    }
    if (!impl->index_of.emplace(name, i).second) {
      throw Error("duplicate atom name '" + name + "'");
    }
  }
  impl->atoms = std::move(atoms);
  impl_ = std::move(impl);
}

std::size_t Vocabulary::atom_count() const { return impl_->atoms.size(); }

std::size_t Vocabulary::interpretation_count() const {
  return std::size_t{1} << atom_count();
}

const std::string& Vocabulary::atom_name(std::size_t atom) const {
  return impl_->atoms.at(atom);
}

const std::vector<std::string>& Vocabulary::atoms() const {
  return impl_->atoms;
}

std::optional<std::size_t> Vocabulary::atom_index(std::string_view name) const {
  auto it = impl_->index_of.find(std::string(name));
  if (it == impl_->index_of.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::truth(Interpretation u, std::size_t atom) const {
  return (u.index() >> (atom_count() - 1 - atom)) & 1u;
}

Interpretation Vocabulary::interpretation(std::uint64_t index) const {
  if (index >= interpretation_count()) {
    throw Error("interpretation index " + std::to_string(index) +
                " out of range for " + std::to_string(atom_count()) +
                " atoms");
  }
  return Interpretation(static_cast<std::uint32_t>(index));
}

std::string Vocabulary::bits(Interpretation u) const {
  std::string out(atom_count(), '0');
  for (std::size_t i = 0; i < atom_count(); ++i) {
    if (truth(u, i)) out[i] = '1';
  }
  return out;
}

Interpretation Vocabulary::interpretation_from_bits(
    std::string_view bits) const {
  if (bits.size() != atom_count()) {
    throw Error("expected " + std::to_string(atom_count()) +
                " digits, got '" + std::string(bits) + "'");
  }
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error("invalid digit in interpretation '" + std::string(bits) +
                  "'");
    }
    index = (index << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return Interpretation(index);
}

std::vector<Interpretation> Vocabulary::interpretations() const {
  std::vector<Interpretation> out;
  out.reserve(interpretation_count());
  for (std::size_t i = 0; i < interpretation_count(); ++i) {
    out.push_back(Interpretation(static_cast<std::uint32_t>(i)));
  }
  return out;
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  return impl_ == other.impl_ || impl_->atoms == other.impl_->atoms;
}

}  // namespace rankmerge
