#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rankmerge/epistemic.hpp"

namespace rankmerge {

/// Parses one state document. The first significant line declares the
/// vocabulary (`atoms: p q`); what follows decides the input kind:
///
///   - rank lines, one per interpretation in any order (`10: 1`),
///   - `kb: <formula>` — the state ranking every interpretation by its
///     distance to the nearest model, or
///   - `infobase: <formula>; <formula>; ...` — the state counting
///     satisfied non-tautological elements.
///
/// Blank lines and lines starting with '#' are ignored.
EpistemicState parse_state_text(std::string_view text);

EpistemicState read_state_file(const std::filesystem::path& path);

/// Canonical rendering: atoms header plus one rank line per
/// interpretation in ascending index order. Round-trips through
/// parse_state_text.
std::string format_state(const EpistemicState& s);

/// E.g. "{ 01, 10 }"; "{ }" when empty. Ascending index order.
std::string format_model_set(const ModelSet& m, const Vocabulary& vocab);

}  // namespace rankmerge
