#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adl/core/context.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"

namespace adl {

struct Definition {
  std::string name;
  Type type;
  Term body;
};

/// A parsed `.adl` file. Definition bodies are closed: references to earlier
/// definitions have been substituted away.
struct SourceUnit {
  std::vector<Definition> defs;
  std::optional<Term> main;

  const Definition* find(std::string_view name) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Parses a whole source file. Terms come back desugared, with shadowing
/// binders renamed apart. Throws ParseError.
SourceUnit parse(std::string_view source);

/// Parses one expression whose free variables are typed by `ctx`.
Term parse_term(std::string_view source, const Context& ctx = {});

Type parse_type(std::string_view source);

/// Concrete syntax for a unit; parse(render(u)) is alpha-equal to u.
std::string render(const SourceUnit& unit);

}  // namespace adl
