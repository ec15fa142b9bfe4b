#include <cstdio>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankmerge/errors.hpp"
#include "rankmerge/infobase.hpp"
#include "rankmerge/operators.hpp"
#include "rankmerge/parser.hpp"
#include "rankmerge/postulates.hpp"
#include "rankmerge/text_io.hpp"

namespace {

using nlohmann::json;
using namespace rankmerge;

// Exit codes shared by all subcommands.
constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSemanticError = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitBudget = 5;

struct GlobalOptions {
  std::string format = "human";
  std::size_t seq_limit = kDefaultSeqEnumerationLimit;
  std::uint64_t budget = 100'000'000;
  std::size_t threads = 0;

  bool structured() const { return format == "structured"; }
  MergeOptions merge_options() const { return MergeOptions{seq_limit}; }
  CheckOptions check_options() const {
    return CheckOptions{budget, seq_limit, threads};
  }
};

std::vector<std::string> model_bits(const ModelSet& m, const Vocabulary& v) {
  std::vector<std::string> out;
  for (Interpretation u : m.interpretations()) out.push_back(v.bits(u));
  return out;
}

json state_json(const EpistemicState& s) { return format_state(s); }

json witness_json(const Witness& w) {
  json out;
  if (!w.epistemic_lists.empty()) {
    json lists = json::array();
    for (const EpistemicList& E : w.epistemic_lists) {
      json states = json::array();
      for (const EpistemicState& s : E.states()) states.push_back(state_json(s));
      lists.push_back(states);
    }
    out["epistemic_lists"] = lists;
  }
  if (w.repeated_state) out["repeated_state"] = state_json(*w.repeated_state);
  if (!w.knowledge_lists.empty()) {
    json lists = json::array();
    for (const KnowledgeList& e : w.knowledge_lists) {
      json kbs = json::array();
      for (const Formula& f : e.elements()) kbs.push_back(f.to_string());
      lists.push_back(kbs);
    }
    out["knowledge_lists"] = lists;
  }
  if (w.repeated_kb) out["repeated_kb"] = w.repeated_kb->to_string();
  if (w.u && !w.epistemic_lists.empty()) {
    out["u"] = w.epistemic_lists[0].vocab().bits(*w.u);
  } else if (w.u && !w.knowledge_lists.empty()) {
    out["u"] = w.knowledge_lists[0].vocab().bits(*w.u);
  }
  if (w.v && !w.epistemic_lists.empty()) {
    out["v"] = w.epistemic_lists[0].vocab().bits(*w.v);
  } else if (w.v && !w.knowledge_lists.empty()) {
    out["v"] = w.knowledge_lists[0].vocab().bits(*w.v);
  }
  if (w.repetitions) out["repetitions"] = *w.repetitions;
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

void print_witness_human(const Witness& w, std::ostream& os) {
  auto indented_state = [&](const EpistemicState& s) {
    std::string text = format_state(s);
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      out += "    " + text.substr(start, end - start) + "\n";
      start = end + 1;
    }
    return out;
  };
  for (std::size_t i = 0; i < w.epistemic_lists.size(); ++i) {
    os << "  epistemic list " << i + 1 << ":\n";
    for (const EpistemicState& s : w.epistemic_lists[i].states()) {
      os << indented_state(s);
    }
  }
  if (w.repeated_state) {
    os << "  repeated state:\n" << indented_state(*w.repeated_state);
  }
  for (std::size_t i = 0; i < w.knowledge_lists.size(); ++i) {
    os << "  knowledge list " << i + 1 << ":";
    for (const Formula& f : w.knowledge_lists[i].elements()) {
      os << " [" << f.to_string() << "]";
    }
    os << "\n";
  }
  if (w.repeated_kb) {
    os << "  repeated kb: " << w.repeated_kb->to_string() << "\n";
  }
  const Vocabulary* vocab = nullptr;
  if (!w.epistemic_lists.empty()) {
    vocab = &w.epistemic_lists[0].vocab();
  } else if (!w.knowledge_lists.empty()) {
    vocab = &w.knowledge_lists[0].vocab();
  }
  if (w.u && vocab) os << "  u: " << vocab->bits(*w.u) << "\n";
  if (w.v && vocab) os << "  v: " << vocab->bits(*w.v) << "\n";
  if (w.repetitions) os << "  repetitions: " << *w.repetitions << "\n";
  if (!w.note.empty()) os << "  note: " << w.note << "\n";
}

std::string bounds_line(const SearchBounds& b) {
  return "atoms=" + std::to_string(b.n_atoms) +
         " max-rank=" + std::to_string(b.max_rank) +
         " list-len=" + std::to_string(b.list_len) +
         " reps=" + std::to_string(b.rep_bound) +
         " meta-len=" + std::to_string(b.meta_list_len);
}

json bounds_json(const SearchBounds& b) {
  return json{{"atoms", b.n_atoms},
              {"max_rank", b.max_rank},
              {"list_len", b.list_len},
              {"reps", b.rep_bound},
              {"meta_len", b.meta_list_len}};
}

json verdict_json(const Verdict& v) {
  json out;
  out["status"] = std::string(verdict_status_name(v.status));
  if (v.witness) out["witness"] = witness_json(*v.witness);
  if (v.unknown_candidate) {
    out["unknown_candidate"] = witness_json(*v.unknown_candidate);
  }
  return out;
}

OperatorId require_operator(const std::string& name) {
  auto op = operator_from_name(name);
  if (!op) throw Error("unknown operator '" + name + "'");
  return *op;
}

// ---- subcommand handlers ----

int run_parse(const GlobalOptions& global, const std::string& atoms,
              const std::string& text) {
  std::istringstream atom_stream(atoms);
  std::vector<std::string> names{std::istream_iterator<std::string>(atom_stream),
                                 std::istream_iterator<std::string>()};
  const Vocabulary vocab(names);
  const Formula f = parse(text, vocab);
  if (global.structured()) {
    json out{{"command", "parse"},
             {"formula", f.to_string()},
             {"models", model_bits(models(f), vocab)},
             {"consistent", is_consistent(f)},
             {"tautology", is_tautology(f)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "formula: " << f.to_string() << "\n";
    std::cout << "models: " << format_model_set(models(f), vocab) << "\n";
    std::cout << "consistent: " << (is_consistent(f) ? "yes" : "no") << "\n";
    std::cout << "tautology: " << (is_tautology(f) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_merge(const GlobalOptions& global, const std::string& op_name,
              const std::vector<std::string>& files) {
  const OperatorId op = require_operator(op_name);
  std::vector<EpistemicState> states;
  for (const std::string& file : files) {
    states.push_back(read_state_file(file));
  }
  const EpistemicList E{std::move(states)};
  const EpistemicState merged = merge(op, E, global.merge_options());
  const KnowledgeBaseView kb = knowledge_base(merged);
  if (global.structured()) {
    json out{{"command", "merge"},
             {"operator", std::string(operator_name(op))},
             {"state", state_json(merged)},
             {"kb", kb.canonical_formula.to_string()},
             {"models", model_bits(kb.model_set, merged.vocab())}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "operator: " << operator_name(op) << "\n";
    std::cout << format_state(merged);
    std::cout << "knowledge base: " << kb.canonical_formula.to_string()
              << "\n";
    std::cout << "models: " << format_model_set(kb.model_set, merged.vocab())
              << "\n";
  }
  return kExitOk;
}

int run_kb(const GlobalOptions& global, const std::string& file) {
  const EpistemicState s = read_state_file(file);
  const KnowledgeBaseView kb = knowledge_base(s);
  if (global.structured()) {
    json out{{"command", "kb"},
             {"state", state_json(s)},
             {"kb", kb.canonical_formula.to_string()},
             {"models", model_bits(kb.model_set, s.vocab())}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "knowledge base: " << kb.canonical_formula.to_string()
              << "\n";
    std::cout << "models: " << format_model_set(kb.model_set, s.vocab())
              << "\n";
  }
  return kExitOk;
}

int run_cells(const GlobalOptions& global, const std::string& op_name,
              const std::vector<std::string>& files) {
  const OperatorId op = require_operator(op_name);
  if (files.size() != 2) {
    throw Error("cells requires exactly two state files");
  }
  const EpistemicState first = read_state_file(files[0]);
  const EpistemicState second = read_state_file(files[1]);
  const EpistemicList E{{first, second}};
  const std::vector<Rank> pre = pre_ranks(op, E, global.merge_options());
  const EpistemicState merged = merge(op, E, global.merge_options());

  // Group interpretations by their realized cell (i, j).
  std::map<std::pair<Rank, Rank>, std::vector<Interpretation>> cells;
  for (std::size_t i = 0; i < merged.ranks().size(); ++i) {
    Interpretation u(static_cast<std::uint32_t>(i));
    cells[{first.rank(u), second.rank(u)}].push_back(u);
  }

  if (global.structured()) {
    json rows = json::array();
    for (const auto& [cell, members] : cells) {
      json row{{"cell", {cell.first, cell.second}},
               {"pre", pre[members.front().index()]},
               {"post", merged.rank(members.front())}};
      std::vector<std::string> bits;
      for (Interpretation u : members) bits.push_back(merged.vocab().bits(u));
      row["interpretations"] = bits;
      rows.push_back(row);
    }
    json out{{"command", "cells"},
             {"operator", std::string(operator_name(op))},
             {"cells", rows}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "operator: " << operator_name(op) << "\n";
    std::cout << "cell (i,j) -> pre / post   interpretations\n";
    for (const auto& [cell, members] : cells) {
      std::cout << "  (" << cell.first << "," << cell.second << ") -> "
                << pre[members.front().index()] << " / "
                << merged.rank(members.front()) << "   ";
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::cout << (i ? " " : "") << merged.vocab().bits(members[i]);
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int verdict_exit_code(const Verdict& v) {
  switch (v.status) {
    case VerdictStatus::kHoldsInBounds:
      return kExitOk;
    case VerdictStatus::kViolated:
      return kExitViolated;
    case VerdictStatus::kUnknown:
      return kExitUnknown;
  }
  return kExitSemanticError;
}

int run_check(const GlobalOptions& global, const std::string& postulate,
              const std::string& op_name, const SearchBounds& bounds) {
  const OperatorId op = require_operator(op_name);
  const auto p = postulate_from_name(postulate);
  if (!p) {
    throw Error("unknown postulate '" + postulate +
                "' (names are case-sensitive: E1-E6, Unit, Comm, Arb, Maj, "
                "KP1-KP6, arb, maj)");
  }
  const Verdict verdict =
      check_postulate(*p, op, bounds, global.check_options());
  if (global.structured()) {
    json out{{"command", "check"},
             {"postulate", postulate},
             {"operator", std::string(operator_name(op))},
             {"bounds", bounds_json(bounds)}};
    out.update(verdict_json(verdict));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "postulate: " << postulate << "\n";
    std::cout << "operator: " << operator_name(op) << "\n";
    std::cout << "bounds: " << bounds_line(bounds) << "\n";
    std::cout << "status: " << verdict_status_name(verdict.status) << "\n";
    if (verdict.witness) {
      std::cout << "witness:\n";
      print_witness_human(*verdict.witness, std::cout);
    }
    if (verdict.unknown_candidate) {
      std::cout << "unsettled instance:\n";
      print_witness_human(*verdict.unknown_candidate, std::cout);
    }
  }
  return verdict_exit_code(verdict);
}

int run_matrix(const GlobalOptions& global, const SearchBounds& bounds) {
  const SatisfactionMatrix matrix =
      satisfaction_matrix(bounds, global.check_options());
  if (global.structured()) {
    json cells = json::array();
    for (const MatrixCell& cell : matrix.cells) {
      json entry{{"operator", std::string(operator_name(cell.op))},
                 {"postulate", std::string(postulate_name(cell.postulate))}};
      entry.update(verdict_json(cell.verdict));
      cells.push_back(entry);
    }
    json out{{"command", "matrix"},
             {"bounds", bounds_json(bounds)},
             {"cells", cells}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "bounds: " << bounds_line(bounds) << "\n";
  std::cout << "legend: + holds-in-bounds, - violated, ? unknown\n\n";
  std::printf("%-8s", "op");
  for (PostulateId p : kAllPostulates) {
    std::printf("%5s", std::string(postulate_name(p)).c_str());
  }
  std::printf("\n");
  for (OperatorId op : kAllOperators) {
    std::printf("%-8s", std::string(operator_name(op)).c_str());
    for (PostulateId p : kAllPostulates) {
      const Verdict& v = matrix.at(op, p);
      const char* symbol = v.status == VerdictStatus::kHoldsInBounds ? "+"
                           : v.status == VerdictStatus::kViolated    ? "-"
                                                                     : "?";
      std::printf("%5s", symbol);
    }
    std::printf("\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rankmerge: merge ranking-function epistemic states and check merging "
      "postulates"};
  app.require_subcommand(1);
  // Let global flags appear after the subcommand name as well.
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--seq-limit", global.seq_limit,
                 "Candidate-space enumeration cap")
      ->capture_default_str();
  app.add_option("--budget", global.budget, "Instance budget per check")
      ->capture_default_str();
  app.add_option("--threads", global.threads,
                 "Worker threads (0 = hardware)")
      ->capture_default_str();

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "Parse and evaluate a formula");
  std::string parse_atoms;
  std::string parse_text;
  cmd_parse->add_option("--atoms", parse_atoms, "Atom names, e.g. \"p q\"")
      ->required();
  cmd_parse->add_option("formula", parse_text, "Formula text")->required();

  // merge
  auto* cmd_merge =
      app.add_subcommand("merge", "Merge state/kb/infobase files");
  std::string merge_op;
  std::vector<std::string> merge_files;
  cmd_merge->add_option("--op", merge_op, "Merging operator")->required();
  cmd_merge->add_option("files", merge_files, "Input files")->required();

  // kb
  auto* cmd_kb =
      app.add_subcommand("kb", "Associated knowledge base of a state file");
  std::string kb_file;
  cmd_kb->add_option("file", kb_file, "Input file")->required();

  // cells
  auto* cmd_cells = app.add_subcommand(
      "cells", "Two-state cell table of pre/post-normalisation values");
  std::string cells_op;
  std::vector<std::string> cells_files;
  cmd_cells->add_option("--op", cells_op, "Merging operator")->required();
  cmd_cells->add_option("files", cells_files, "Exactly two state files")
      ->required();

  // bounds options shared by check and matrix
  SearchBounds bounds;
  auto add_bounds = [&bounds](CLI::App* cmd) {
    cmd->add_option("--atoms", bounds.n_atoms, "Number of atoms")
        ->capture_default_str();
    cmd->add_option("--max-rank", bounds.max_rank, "Largest state rank")
        ->capture_default_str();
    cmd->add_option("--list-len", bounds.list_len, "Largest list length")
        ->capture_default_str();
    cmd->add_option("--reps", bounds.rep_bound, "Repetition bound")
        ->capture_default_str();
    cmd->add_option("--meta-len", bounds.meta_list_len,
                    "Largest list-of-lists length")
        ->capture_default_str();
  };

  // check
  auto* cmd_check = app.add_subcommand("check", "Check one postulate");
  std::string check_postulate;
  std::string check_op;
  cmd_check->add_option("--postulate", check_postulate, "Postulate name")
      ->required();
  cmd_check->add_option("--op", check_op, "Merging operator")->required();
  add_bounds(cmd_check);

  // matrix
  auto* cmd_matrix =
      app.add_subcommand("matrix", "Operator x postulate satisfaction grid");
  add_bounds(cmd_matrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (*cmd_parse) return run_parse(global, parse_atoms, parse_text);
    if (*cmd_merge) return run_merge(global, merge_op, merge_files);
    if (*cmd_kb) return run_kb(global, kb_file);
    if (*cmd_cells) return run_cells(global, cells_op, cells_files);
    if (*cmd_check) {
      return run_check(global, check_postulate, check_op, bounds);
    }
    if (*cmd_matrix) return run_matrix(global, bounds);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemanticError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemanticError;
  }
  return kExitOk;
}
