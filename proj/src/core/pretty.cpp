#include "adl/core/pretty.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace adl {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace {

// Precedence levels: 0 open forms (fun, let, match, fold, inj),
// 1 sums, 2 products, 3 application, 4 atoms.
class Printer {
 public:
  explicit Printer(std::ostringstream& os) : os_(os) {}

  void print(const Term& t, int level) {
    int own = level_of(t);
    bool parens = own < level;
    if (parens) os_ << '(';
    print_bare(t);
    if (parens) os_ << ')';
  }

 private:
  static bool is_infix(const term::PrimOp& p) { return (p.op == "add" || p.op == "mul") && p.args.size() == 2; }

  static int level_of(const Term& t) {
    return visit(t, overloaded{
                        [](const term::PrimOp& p) { return is_infix(p) ? (p.op == "add" ? 1 : 2) : 4; },
                        [](const term::Lam&) { return 0; },
                        [](const term::App& a) { return a.fn.is<term::Lam>() ? 0 : 3; },
                        [](const term::MatchTuple&) { return 0; },
                        [](const term::MatchVariant&) { return 0; },
                        [](const term::Inject&) { return 0; },
                        [](const term::Fold&) { return 0; },
                        [](const auto&) { return 4; },
                    });
  }

  void newline() {
    os_ << '\n';
    for (int i = 0; i < indent_; ++i) os_ << ' ';
  }

  // Bodies of let / match-tuple chains go on their own line at the same
  // indentation so long derivative terms read top to bottom.
  void chain_body(const Term& body) {
    if (level_of(body) == 0) {
      newline();
    } else {
      os_ << ' ';
    }
    print(body, 0);
  }

  void print_list(const std::vector<Term>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) os_ << ", ";
      print(ts[i], 0);
    }
  }

  void print_bare(const Term& t) {
    visit(t, overloaded{
                 [&](const term::Var& v) { os_ << v.name; },
                 [&](const term::Const& c) {
                   if (std::signbit(c.value) && !std::isnan(c.value)) {
                     os_ << '(' << format_real(c.value) << ')';
                   } else {
                     os_ << format_real(c.value);
                   }
                 },
                 [&](const term::PrimOp& p) {
                   if (is_infix(p)) {
                     bool sum = p.op == "add";
                     print(p.args[0], sum ? 1 : 2);
                     os_ << (sum ? " + " : " * ");
                     print(p.args[1], sum ? 2 : 3);
                   } else {
                     os_ << p.op << '(';
                     print_list(p.args);
                     os_ << ')';
                   }
                 },
                 [&](const term::Lam& l) {
                   os_ << "fun (" << l.var << " : " << l.annot << ") =>";
                   indent_ += 2;
                   chain_body(l.body);
                   indent_ -= 2;
                 },
                 [&](const term::App& a) {
                   if (a.fn.is<term::Lam>()) {
                     const auto& l = a.fn.as<term::Lam>();
                     os_ << "let " << l.var << " : " << l.annot << " = ";
                     print(a.arg, 0);
                     os_ << " in";
                     chain_body(l.body);
                   } else {
                     print(a.fn, 3);
                     os_ << ' ';
                     print(a.arg, 4);
                   }
                 },
                 [&](const term::Tuple& tu) {
                   os_ << '(';
                   print_list(tu.items);
                   if (tu.items.size() == 1) os_ << ',';
                   os_ << ')';
                 },
                 [&](const term::MatchTuple& m) {
                   os_ << "match ";
                   print(m.scrutinee, 0);
                   os_ << " with (";
                   for (std::size_t i = 0; i < m.vars.size(); ++i) os_ << (i ? ", " : "") << m.vars[i];
                   if (m.vars.size() == 1) os_ << ',';
                   os_ << ") =>";
                   chain_body(m.body);
                 },
                 [&](const term::Inject& i) {
                   os_ << "inj " << i.ctor << ' ';
                   print(i.payload, 4);
                   os_ << " as " << i.variant;
                 },
                 [&](const term::MatchVariant& m) {
                   os_ << "match ";
                   print(m.scrutinee, 0);
                   os_ << " with";
                   indent_ += 2;
                   for (const auto& b : m.branches) {
                     newline();
                     os_ << "| " << b.ctor << ' ' << b.var << " =>";
                     indent_ += 2;
                     chain_body(b.body);
                     indent_ -= 2;
                   }
                   indent_ -= 2;
                   newline();
                   os_ << "end";
                 },
                 [&](const term::Nil& n) { os_ << "nil[" << n.elem << ']'; },
                 [&](const term::Cons& c) {
                   os_ << "cons(";
                   print(c.head, 0);
                   os_ << ", ";
                   print(c.tail, 0);
                   os_ << ')';
                 },
                 [&](const term::Fold& f) {
                   os_ << "fold (" << f.head_var << ", " << f.acc_var << " => ";
                   print(f.step, 0);
                   os_ << ") over ";
                   print(f.over, 0);
                   os_ << " from ";
                   print(f.base, 0);
                 },
             });
  }

  std::ostringstream& os_;
  int indent_ = 0;
};

}  // namespace

std::string pretty(const Term& t) {
  std::ostringstream os;
  Printer(os).print(t, 0);
  return os.str();
}

}  // namespace adl
