#include "adl/syntax/parser.hpp"

#include <set>
#include <sstream>

#include "adl/core/fresh.hpp"
#include "adl/core/ops.hpp"
#include "adl/core/pretty.hpp"
#include "adl/core/subst.hpp"
#include "adl/types/typecheck.hpp"
#include "lexer.hpp"

namespace adl {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

const Definition* SourceUnit::find(std::string_view name) const {
  for (const auto& d : defs) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

namespace {

using syntax::Token;

struct Pattern {
  Token tok;
  std::optional<std::string> name;  // set for a plain binder
  std::vector<Pattern> items;       // tuple pattern otherwise
};

// Tuple matches introduced by desugaring a pattern, outermost first.
struct PatternMatch {
  std::string scrutinee;
  std::vector<std::string> vars;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(syntax::lex(src)) {
    for (const auto& t : toks_) {
      if (t.kind == Token::Kind::Ident) fresh::observe(t.text);
    }
  }

  void seed_scope(const Context& ctx) {
    for (const auto& [name, ty] : ctx.bindings()) scope_.push_back({name, name, ty});
  }

  SourceUnit unit() {
    SourceUnit u;
    std::set<std::string> names;
    while (peek().is("def")) {
      next();
      auto name_tok = expect_ident("definition name");
      if (!names.insert(name_tok.text).second) error(name_tok, "duplicate definition '" + name_tok.text + "'");
      expect(":");
      auto ty = type();
      expect("=");
      auto body = expr();
      expect(";");
      for (auto it = u.defs.rbegin(); it != u.defs.rend(); ++it) body = subst(body, it->name, it->body);
      u.defs.push_back({name_tok.text, ty, body});
      scope_.push_back({name_tok.text, name_tok.text, ty});
    }
    if (peek().kind != Token::Kind::End) {
      auto body = expr();
      if (peek().is(";")) next();
      for (auto it = u.defs.rbegin(); it != u.defs.rend(); ++it) body = subst(body, it->name, it->body);
      u.main = body;
    }
    expect_end();
    return u;
  }

  Term standalone_term() {
    auto t = expr();
    expect_end();
    return t;
  }

  Type standalone_type() {
    auto t = type();
    expect_end();
    return t;
  }

 private:
  struct ScopeEntry {
    std::string source;
    std::string internal;
    std::optional<Type> type;
  };

  // ---- tokens -------------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const auto& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void error(const Token& at, const std::string& msg) const { throw ParseError(at.line, at.column, msg); }

  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of input";
    return "'" + t.text + "'";
  }

  void expect(std::string_view sym) {
    if (!peek().is(sym)) error(peek(), "expected '" + std::string(sym) + "', found " + describe(peek()));
    next();
  }

  void expect_end() {
    if (peek().kind != Token::Kind::End) error(peek(), "unexpected " + describe(peek()));
  }

  Token expect_ident(const std::string& what) {
    if (peek().kind != Token::Kind::Ident) error(peek(), "expected " + what + ", found " + describe(peek()));
    auto t = next();
    if (find_op(t.text)) error(t, "'" + t.text + "' is a primitive operation and cannot be used as a name");
    return t;
  }

  // ---- scope --------------------------------------------------------------

  std::optional<ScopeEntry> lookup(const std::string& source) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->source == source) return *it;
    }
    return std::nullopt;
  }

  // Binders that would shadow something in scope get a fresh name.
  std::string bind(const Token& tok, std::optional<Type> ty) {
    std::string internal;
    if (tok.text == "_") {
      internal = fresh::name("_");
    } else if (lookup(tok.text) || is_internal_in_scope(tok.text)) {
      internal = fresh::name(tok.text);
    } else {
      internal = tok.text;
    }
    scope_.push_back({tok.text, internal, std::move(ty)});
    return internal;
  }

  bool is_internal_in_scope(const std::string& name) const {
    for (const auto& e : scope_) {
      if (e.internal == name) return true;
    }
    return false;
  }

  std::string bind_internal(std::optional<Type> ty) {
    auto name = fresh::name("p");
    scope_.push_back({name, name, std::move(ty)});
    return name;
  }

  Context scope_context() const {
    Context ctx;
    for (const auto& e : scope_) {
      if (e.type) ctx.extend(e.internal, *e.type);
    }
    return ctx;
  }

  std::optional<Type> try_infer(const Term& t) const {
    try {
      return infer(scope_context(), t);
    } catch (const TypeError&) {
      return std::nullopt;
    }
  }

  Type must_infer(const Token& at, const Term& t, const std::string& what) const {
    try {
      return infer(scope_context(), t);
    } catch (const TypeError& e) {
      error(at, "cannot infer the type of " + what + " (add an annotation): " + e.what());
    }
  }

  // ---- types --------------------------------------------------------------

  Type type() {
    auto dom = type_app();
    if (peek().is("->")) {
      next();
      return Type::arrow(dom, type());
    }
    return dom;
  }

  Type type_app() {
    if (peek().is("list")) {
      next();
      return Type::list(type_app());
    }
    return type_atom();
  }

  Type type_atom() {
    const auto& t = peek();
    if (t.is("real")) {
      next();
      return Type::real();
    }
    if (t.is("(")) {
      next();
      std::vector<Type> items;
      bool trailing_comma = false;
      while (!peek().is(")")) {
        items.push_back(type());
        trailing_comma = false;
        if (peek().is(",")) {
          next();
          trailing_comma = true;
        } else {
          break;
        }
      }
      expect(")");
      if (items.size() == 1 && !trailing_comma) return items[0];
      return Type::prod(std::move(items));
    }
    if (t.is("<")) {
      auto open = next();
      std::vector<Type::Case> cases;
      std::set<std::string> seen;
      do {
        if (peek().is("|")) next();
        auto ctor = expect_ident("constructor name");
        if (!seen.insert(ctor.text).second) error(ctor, "duplicate constructor '" + ctor.text + "' in variant type");
        expect(":");
        cases.emplace_back(ctor.text, type());
      } while (peek().is("|"));
      expect(">");
      if (cases.empty()) error(open, "variant type needs at least one case");
      return Type::variant(std::move(cases));
    }
    error(t, "expected a type, found " + describe(t));
  }

  // ---- patterns -----------------------------------------------------------

  Pattern pattern() {
    Pattern p;
    p.tok = peek();
    if (peek().is("(")) {
      next();
      while (!peek().is(")")) {
        p.items.push_back(pattern());
        if (!peek().is(",")) break;
        next();
      }
      expect(")");
      return p;
    }
    auto id = expect_ident("variable or tuple pattern");
    if (syntax::is_keyword(id.text)) error(id, "keyword used as a variable");
    p.name = id.text;
    return p;
  }

  // Brings the pattern's variables into scope and returns the variable that
  // receives the whole value.
  std::string bind_pattern(const Pattern& p, const Type& ty, std::vector<PatternMatch>& matches) {
    if (p.name) return bind(p.tok, ty);
    if (!ty.is_prod() || ty.components().size() != p.items.size()) {
      error(p.tok, "tuple pattern with " + std::to_string(p.items.size()) + " components does not match type " + ty.str());
    }
    auto whole = bind_internal(ty);
    auto slot = matches.size();
    matches.push_back({whole, {}});
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < p.items.size(); ++i) vars.push_back(bind_pattern(p.items[i], ty.components()[i], matches));
    matches[slot].vars = std::move(vars);
    return whole;
  }

  static Term wrap_matches(const std::vector<PatternMatch>& matches, Term body) {
    for (auto it = matches.rbegin(); it != matches.rend(); ++it) body = match_tuple(var(it->scrutinee), it->vars, body);
    return body;
  }

  // ---- expressions --------------------------------------------------------

  Term expr() {
    const auto& t = peek();
    if (t.is("fun")) return fun_expr();
    if (t.is("let")) return let_expr();
    if (t.is("match")) return match_expr();
    if (t.is("fold")) return fold_expr();
    if (t.is("inj")) return inj_expr();
    return sum();
  }

  Term fun_expr() {
    auto start = next();
    struct Param {
      std::string var;
      Type type;
      std::vector<PatternMatch> matches;
    };
    std::vector<Param> params;
    auto mark = scope_.size();
    if (!peek().is("(")) error(peek(), "expected '(' to start a parameter, found " + describe(peek()));
    while (peek().is("(")) {
      next();
      auto pat = pattern();
      expect(":");
      auto ty = type();
      expect(")");
      Param prm{"", ty, {}};
      prm.var = bind_pattern(pat, ty, prm.matches);
      params.push_back(std::move(prm));
    }
    expect("=>");
    auto body = expr();
    scope_.resize(mark);
    for (auto it = params.rbegin(); it != params.rend(); ++it) body = lam(it->var, it->type, wrap_matches(it->matches, body));
    (void)start;
    return body;
  }

  Term let_expr() {
    auto start = next();
    auto pat = pattern();
    std::optional<Type> annot;
    if (peek().is(":")) {
      next();
      annot = type();
    }
    expect("=");
    auto bound = expr();
    expect("in");
    Type ty = annot ? *annot : must_infer(start, bound, "let-bound expression");
    auto mark = scope_.size();
    std::vector<PatternMatch> matches;
    auto x = bind_pattern(pat, ty, matches);
    auto body = expr();
    scope_.resize(mark);
    return app(lam(x, ty, wrap_matches(matches, body)), bound);
  }

  Term match_expr() {
    next();
    auto scrut = expr();
    expect("with");
    auto scrut_ty = try_infer(scrut);
    if (peek().is("(")) {
      auto open = next();
      std::vector<Token> names;
      while (!peek().is(")")) {
        names.push_back(expect_ident("variable"));
        if (!peek().is(",")) break;
        next();
      }
      expect(")");
      std::set<std::string> seen;
      for (const auto& n : names) {
        if (n.text != "_" && !seen.insert(n.text).second) error(n, "variable '" + n.text + "' bound twice in pattern");
      }
      expect("=>");
      bool typed = scrut_ty && scrut_ty->is_prod() && scrut_ty->components().size() == names.size();
      auto mark = scope_.size();
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < names.size(); ++i) {
        vars.push_back(bind(names[i], typed ? std::optional<Type>(scrut_ty->components()[i]) : std::nullopt));
      }
      auto body = expr();
      scope_.resize(mark);
      (void)open;
      return match_tuple(scrut, std::move(vars), body);
    }
    std::vector<term::Branch> branches;
    std::set<std::string> seen;
    if (!peek().is("|") && peek().kind != Token::Kind::Ident) {
      error(peek(), "expected '(' or '|' after 'with', found " + describe(peek()));
    }
    while (peek().is("|") || (branches.empty() && peek().kind == Token::Kind::Ident)) {
      if (peek().is("|")) next();
      auto ctor = expect_ident("constructor name");
      if (!seen.insert(ctor.text).second) error(ctor, "duplicate branch for constructor '" + ctor.text + "'");
      auto v = expect_ident("branch variable");
      expect("=>");
      std::optional<Type> payload;
      if (scrut_ty && scrut_ty->is_variant()) {
        int idx = scrut_ty->case_index(ctor.text);
        if (idx >= 0) payload = scrut_ty->cases()[static_cast<std::size_t>(idx)].second;
      }
      auto mark = scope_.size();
      auto bound = bind(v, payload);
      auto body = expr();
      scope_.resize(mark);
      branches.push_back({ctor.text, bound, body});
    }
    expect("end");
    return match_variant(scrut, std::move(branches));
  }

  Term fold_expr() {
    next();
    expect("(");
    auto h = expect_ident("fold head variable");
    expect(",");
    auto a = expect_ident("fold accumulator variable");
    if (h.text == a.text && h.text != "_") error(a, "fold binds '" + a.text + "' twice");
    expect("=>");
    // The step is parsed after `over`/`from` so its binders can be typed.
    auto step_pos = pos_;
    skip_to_closing_paren();
    expect(")");
    expect("over");
    auto over = expr();
    expect("from");
    auto base = expr();
    auto end_pos = pos_;

    auto over_ty = try_infer(over);
    auto base_ty = try_infer(base);
    std::optional<Type> elem;
    if (over_ty && over_ty->is_list()) elem = over_ty->element();

    pos_ = step_pos;
    auto mark = scope_.size();
    auto hv = bind(h, elem);
    auto av = bind(a, base_ty);
    auto step = expr();
    if (!peek().is(")")) error(peek(), "expected ')' after fold step, found " + describe(peek()));
    scope_.resize(mark);
    pos_ = end_pos;
    return fold(hv, av, step, over, base);
  }

  void skip_to_closing_paren() {
    int depth = 0;
    while (true) {
      const auto& t = peek();
      if (t.kind == Token::Kind::End) error(t, "unterminated fold step");
      if (t.is("(") || t.is("[")) ++depth;
      if (t.is(")") || t.is("]")) {
        if (depth == 0) return;
        --depth;
      }
      next();
    }
  }

  Term inj_expr() {
    next();
    auto ctor = expect_ident("constructor name");
    auto payload = expr();
    expect("as");
    auto ty = type();
    return inject(ty, ctor.text, payload);
  }

  Term sum() {
    auto lhs = product();
    while (peek().is("+") || peek().is("-")) {
      bool plus = next().is("+");
      auto rhs = product();
      lhs = plus ? add(lhs, rhs) : sub(lhs, rhs);
    }
    return lhs;
  }

  Term product() {
    auto lhs = unary();
    while (peek().is("*")) {
      next();
      lhs = mul(lhs, unary());
    }
    return lhs;
  }

  Term unary() {
    if (peek().is("-")) {
      next();
      if (peek().kind == Token::Kind::Number) {
        auto lit = constant(-next().number);
        return application(lit);
      }
      return mul(constant(-1.0), unary());
    }
    return application(atom());
  }

  Term application(Term fn) {
    while (starts_atom(peek())) fn = app(fn, atom());
    return fn;
  }

  static bool starts_atom(const Token& t) {
    return t.kind == Token::Kind::Ident || t.kind == Token::Kind::Number || t.is("(") || t.is("nil") ||
           t.is("cons") || t.is("[");
  }

  Term atom() {
    const auto& t = peek();
    if (t.kind == Token::Kind::Number) return constant(next().number);
    if (t.kind == Token::Kind::Ident) {
      auto id = next();
      if (const auto* op = find_op(id.text)) {
        expect("(");
        std::vector<Term> args;
        while (!peek().is(")")) {
          args.push_back(expr());
          if (!peek().is(",")) break;
          next();
        }
        expect(")");
        if (args.size() != op->arity) {
          error(id, "'" + id.text + "' takes " + std::to_string(op->arity) + " arguments, got " +
                        std::to_string(args.size()));
        }
        return prim(id.text, std::move(args));
      }
      if (auto e = lookup(id.text)) return var(e->internal);
      return var(id.text);
    }
    if (t.is("(")) {
      next();
      std::vector<Term> items;
      bool trailing_comma = false;
      while (!peek().is(")")) {
        items.push_back(expr());
        trailing_comma = false;
        if (!peek().is(",")) break;
        next();
        trailing_comma = true;
      }
      expect(")");
      if (items.size() == 1 && !trailing_comma) return items[0];
      return tuple(std::move(items));
    }
    if (t.is("nil")) {
      next();
      expect("[");
      auto ty = type();
      expect("]");
      return nil(ty);
    }
    if (t.is("cons")) {
      next();
      expect("(");
      auto h = expr();
      expect(",");
      auto tl = expr();
      expect(")");
      return cons(h, tl);
    }
    if (t.is("[")) {
      auto open = next();
      std::vector<Term> items;
      while (!peek().is("]")) {
        items.push_back(expr());
        if (!peek().is(",")) break;
        next();
      }
      expect("]");
      if (items.empty()) error(open, "empty list literal; write nil[<type>]");
      auto elem = must_infer(open, items.front(), "list element");
      Term out = nil(elem);
      for (auto it = items.rbegin(); it != items.rend(); ++it) out = cons(*it, out);
      return out;
    }
    error(t, "expected an expression, found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<ScopeEntry> scope_;
};

}  // namespace

SourceUnit parse(std::string_view source) { return Parser(source).unit(); }

Term parse_term(std::string_view source, const Context& ctx) {
  Parser p(source);
  p.seed_scope(ctx);
  return p.standalone_term();
}

Type parse_type(std::string_view source) { return Parser(source).standalone_type(); }

std::string render(const SourceUnit& unit) {
  std::ostringstream os;
  for (const auto& d : unit.defs) {
    os << "def " << d.name << " : " << d.type << " =\n" << pretty(d.body) << ";\n\n";
  }
  if (unit.main) os << pretty(*unit.main) << "\n";
  return os.str();
}

}  // namespace adl
