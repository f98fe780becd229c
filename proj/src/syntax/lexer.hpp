#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace adl::syntax {

struct Token {
  enum class Kind { Ident, Number, Sym, End };
  Kind kind = Kind::End;
  std::string text;  // identifier, keyword or symbol spelling
  double number = 0.0;
  int line = 1;
  int column = 1;

  bool is(std::string_view s) const { return kind == Kind::Sym && text == s; }
};

/// Splits source text into tokens; keywords come back as Sym tokens.
/// Throws ParseError on an invalid character or malformed literal.
std::vector<Token> lex(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace adl::syntax
