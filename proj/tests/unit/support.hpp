#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "adl/core/context.hpp"
#include "adl/core/fresh.hpp"
#include "adl/core/term.hpp"
#include "adl/syntax/parser.hpp"

namespace test {

inline adl::Type ty(std::string_view src) { return adl::parse_type(src); }

inline adl::Term tm(std::string_view src, const adl::Context& ctx = {}) { return adl::parse_term(src, ctx); }

inline std::string corpus_path(const std::string& stem) { return std::string(ADL_CORPUS_DIR) + "/" + stem + ".adl"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline adl::SourceUnit corpus_unit(const std::string& stem) { return adl::parse(read_file(corpus_path(stem))); }

inline const adl::Definition& corpus_def(const adl::SourceUnit& unit, const std::string& name) {
  const auto* d = unit.find(name);
  if (!d) throw std::runtime_error("no definition " + name);
  return *d;
}

/// Renames every binder of t to a fresh name, consistently. An independent
/// way to produce alpha-variants for property tests.
adl::Term rename_binders(const adl::Term& t);

}  // namespace test
