#include "lexer.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "adl/syntax/parser.hpp"

namespace adl::syntax {

namespace {

constexpr std::array<std::string_view, 18> kKeywords = {"fun",  "let", "in",   "match", "with", "end",
                                                        "inj",  "as",  "nil",  "cons",  "fold", "over",
                                                        "from", "def", "real", "list",  "inf",  "nan"};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\'' || c == '#'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  int last_line = 1, last_col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      last_line = line;
      last_col = col;
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (starts("--")) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      tok.text = std::string(src.substr(i, j - i));
      if (tok.text == "inf" || tok.text == "nan") {
        tok.kind = Token::Kind::Number;
        tok.number = tok.text == "inf" ? std::numeric_limits<double>::infinity()
                                       : std::numeric_limits<double>::quiet_NaN();
      } else {
        tok.kind = is_keyword(tok.text) ? Token::Kind::Sym : Token::Kind::Ident;
      }
      advance(j - i);
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < src.size() && digit(src[j])) ++j;
      if (j + 1 < src.size() && src[j] == '.' && digit(src[j + 1])) {
        ++j;
        while (j < src.size() && digit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && digit(src[k])) {
          while (k < src.size() && digit(src[k])) ++k;
          j = k;
        }
      }
      tok.kind = Token::Kind::Number;
      tok.text = std::string(src.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.number);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(line, col, "numeric literal out of range: " + tok.text);
      }
      advance(j - i);
    } else {
      static constexpr std::array<std::pair<std::string_view, std::string_view>, 18> kSyms = {{
          {"=>", "=>"}, {"->", "->"}, {"→", "->"}, {"⇒", "=>"}, {"(", "("}, {")", ")"},
          {",", ","},   {":", ":"},   {"=", "="},       {"|", "|"},       {"<", "<"}, {">", ">"},
          {"[", "["},   {"]", "]"},   {"+", "+"},       {"*", "*"},       {"-", "-"}, {";", ";"},
      }};
      bool matched = false;
      for (auto [spelling, canon] : kSyms) {
        if (starts(spelling)) {
          tok.kind = Token::Kind::Sym;
          tok.text = std::string(canon);
          advance(spelling.size());
          matched = true;
          break;
        }
      }
      if (!matched) throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.text = "end of input";
  end.line = last_line;
  end.column = last_col;
  out.push_back(end);
  return out;
}

}  // namespace adl::syntax
