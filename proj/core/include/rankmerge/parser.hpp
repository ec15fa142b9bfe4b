#pragma once

#include <string_view>

#include "rankmerge/formula.hpp"
#include "rankmerge/vocabulary.hpp"

namespace rankmerge {

/// Parses formula text over an explicit vocabulary.
///
/// Grammar (loosest to tightest): `<->`, `->`, `|`, `&`, `~`; the arrows
/// are right-associative, `&` and `|` left-associative. Atoms are
/// identifiers declared in the vocabulary; `true` and `false` are
/// constants. Whitespace is insignificant.
///
/// Throws ParseError on malformed input and UnknownAtomError when an
/// identifier is not in the vocabulary.
Formula parse(std::string_view text, const Vocabulary& vocab);

}  // namespace rankmerge
