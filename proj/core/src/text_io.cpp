#include "rankmerge/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "rankmerge/errors.hpp"
#include "rankmerge/infobase.hpp"
#include "rankmerge/parser.hpp"

namespace rankmerge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

struct Line {
  std::string_view text;  // trimmed
  std::size_t number;     // 1-based
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view raw =
        eol == std::string_view::npos ? text : text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++number;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back({line, number});
  }
  return lines;
}

// "prefix: rest" -> rest, if the line starts with the given keyword.
std::optional<std::string_view> strip_keyword(std::string_view line,
                                              std::string_view keyword) {
  if (!line.starts_with(keyword)) return std::nullopt;
  std::string_view rest = line.substr(keyword.size());
  if (rest.empty() || rest.front() != ':') return std::nullopt;
  return trim(rest.substr(1));
}

Rank parse_rank(std::string_view text, std::size_t line_number) {
  Rank value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("invalid rank '" + std::string(text) + "'", line_number);
  }
  return value;
}

std::vector<std::string> split_atoms(std::string_view rest) {
  std::vector<std::string> atoms;
  std::istringstream stream{std::string(rest)};
  std::string word;
  while (stream >> word) atoms.push_back(word);
  return atoms;
}

}  // namespace

EpistemicState parse_state_text(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty state document", 1);

  auto atoms_rest = strip_keyword(lines.front().text, "atoms");
  if (!atoms_rest) {
    throw ParseError("state documents must start with an 'atoms:' header",
                     lines.front().number);
  }
  const Vocabulary vocab(split_atoms(*atoms_rest));

  if (lines.size() == 1) {
    throw ParseError("state document ends after the atoms header",
                     lines.front().number);
  }

  if (auto kb_rest = strip_keyword(lines[1].text, "kb")) {
    if (lines.size() > 2) {
      throw ParseError("unexpected content after the kb line",
                       lines[2].number);
    }
    return state_from_kb(parse(*kb_rest, vocab));
  }

  if (auto ib_rest = strip_keyword(lines[1].text, "infobase")) {
    if (lines.size() > 2) {
      throw ParseError("unexpected content after the infobase line",
                       lines[2].number);
    }
    std::vector<Formula> wffs;
    std::string_view rest = *ib_rest;
    if (!rest.empty()) {
      while (true) {
        std::size_t cut = rest.find(';');
        std::string_view part =
            trim(cut == std::string_view::npos ? rest : rest.substr(0, cut));
        if (part.empty()) {
          throw ParseError("empty formula in infobase list",
                           lines[1].number);
        }
        wffs.push_back(parse(part, vocab));
        if (cut == std::string_view::npos) break;
        rest = rest.substr(cut + 1);
      }
    }
    return state_from_infobase(Infobase(vocab, std::move(wffs)));
  }

  // Rank lines: every interpretation exactly once, any order.
  std::vector<Rank> ranks(vocab.interpretation_count(), 0);
  std::vector<bool> seen(vocab.interpretation_count(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::size_t colon = line.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'bits: rank'", line.number);
    }
    std::string_view bits = trim(line.text.substr(0, colon));
    std::string_view rank_text = trim(line.text.substr(colon + 1));
    Interpretation u(0);
    try {
      u = vocab.interpretation_from_bits(bits);
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number);
    }
    if (seen[u.index()]) {
      throw ParseError("duplicate interpretation '" + std::string(bits) + "'",
                       line.number);
    }
    seen[u.index()] = true;
    ranks[u.index()] = parse_rank(rank_text, line.number);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw ParseError(
          "missing rank for interpretation '" +
              vocab.bits(Interpretation(static_cast<std::uint32_t>(i))) + "'",
          lines.back().number);
    }
  }
  return EpistemicState(vocab, std::move(ranks));
}

EpistemicState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_text(buffer.str());
}

std::string format_state(const EpistemicState& s) {
  std::string out = "atoms:";
  for (const std::string& atom : s.vocab().atoms()) {
    out += ' ';
    out += atom;
  }
  out += '\n';
  for (std::size_t i = 0; i < s.ranks().size(); ++i) {
    out += s.vocab().bits(Interpretation(static_cast<std::uint32_t>(i)));
    out += ": ";
    out += std::to_string(s.ranks()[i]);
    out += '\n';
  }
  return out;
}

std::string format_model_set(const ModelSet& m, const Vocabulary& vocab) {
  std::string out = "{";
  bool first = true;
  for (Interpretation u : m.interpretations()) {
    out += first ? " " : ", ";
    out += vocab.bits(u);
    first = false;
  }
  out += first ? "}" : " }";
  return out;
}

}  // namespace rankmerge
