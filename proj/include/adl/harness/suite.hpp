#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adl/harness/checks.hpp"
#include "adl/syntax/parser.hpp"

namespace adl {

inline constexpr std::size_t kDualTrials = 50;
inline constexpr std::size_t kAgreementPoints = 10;
inline constexpr std::size_t kRoundtripTrials = 100;

/// A named closed term from a corpus file: a definition or the main term.
struct CorpusEntry {
  std::string name;
  Term term;
  Type type;

  bool is_program() const { return is_first_order_program(type); }
  Program program(const std::string& stem) const { return {stem + "/" + name, term, type}; }
};

/// A parsed `.adl` file plus its optional `<stem>.checks.json` manifest.
///
/// Manifest keys, all optional:
///   "skip":          ["<entry>/<check>", ...]   checks not to run
///   "dual_trials":   n                          override for the dual-number check
///   "functoriality": [{"context": {"y": "real"}, "var": "x", "var_type": "real",
///                      "t": "<term>", "u": "<term>"}, ...]
///   "roundtrip":     ["<type>", ...]            extra types for wrap/unwrap
struct CorpusFile {
  std::filesystem::path path;
  std::string stem;
  std::optional<SourceUnit> unit;
  std::string error;  // load failure, empty on success
  std::vector<CorpusEntry> entries;

  std::set<std::string> skip;
  std::size_t dual_trials = kDualTrials;
  std::vector<SubstTriple> triples;
  std::vector<Type> roundtrip_types;
};

/// `.adl` files of a directory in lexicographic order. Throws
/// std::runtime_error if the directory cannot be read.
std::vector<std::filesystem::path> corpus_paths(const std::filesystem::path& dir);

/// Never throws for content errors; they are stored in `error`.
CorpusFile load_corpus_file(const std::filesystem::path& path);

/// Substitution triples derived from every definition of the form
/// fun (x : sigma) => body with first-order sigma: t = body and u a random
/// literal of type sigma. Manifest triples are appended.
std::vector<SubstTriple> substitution_triples(const CorpusFile& file, std::uint64_t seed);

/// Every check for every file of `dir`, in a deterministic order.
std::vector<CheckReport> run_suite(const std::filesystem::path& dir, std::uint64_t seed);

std::vector<CheckReport> run_file_checks(const CorpusFile& file, std::uint64_t seed);

bool all_passed(const std::vector<CheckReport>& reports);

std::string format_report_text(const std::vector<CheckReport>& reports);

/// JSON array of {name, status, max_abs_dev, max_rel_dev, trials, seed[, detail]}.
std::string format_report_json(const std::vector<CheckReport>& reports);

}  // namespace adl
