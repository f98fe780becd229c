#include "adl/types/typecheck.hpp"

#include <set>
#include <sstream>

#include "adl/core/ops.hpp"
#include "adl/core/subst.hpp"
#include "adl/syntax/parser.hpp"

namespace adl {

TypeError::TypeError(std::vector<std::size_t> path, std::string expected, std::optional<Type> found,
                     const std::string& message)
    : std::runtime_error(message), path_(std::move(path)), expected_(std::move(expected)), found_(std::move(found)) {}

std::string TypeError::path_str() const {
  std::string s = "$";
  for (auto i : path_) s += "." + std::to_string(i);
  return s;
}

namespace {

class Checker {
 public:
  Type infer(const Context& ctx, const Term& t) {
    return visit(t, overloaded{
                        [&](const term::Var& v) -> Type {
                          if (auto ty = ctx.lookup(v.name)) return *ty;
                          fail("bound variable", std::nullopt, "unbound variable '" + v.name + "'");
                        },
                        [&](const term::Const&) { return Type::real(); },
                        [&](const term::PrimOp& p) {
                          const auto* op = find_op(p.op);
                          if (!op) fail("known primitive", std::nullopt, "unknown primitive operation '" + p.op + "'");
                          if (op->arity != p.args.size()) {
                            fail("arity " + std::to_string(op->arity), std::nullopt,
                                 "arity mismatch: '" + p.op + "' takes " + std::to_string(op->arity) + " arguments, got " +
                                     std::to_string(p.args.size()));
                          }
                          for (std::size_t i = 0; i < p.args.size(); ++i) expect(ctx, p.args[i], i, Type::real());
                          return Type::real();
                        },
                        [&](const term::Lam& l) {
                          return Type::arrow(l.annot, sub(0, ctx.extended(l.var, l.annot), l.body));
                        },
                        [&](const term::App& a) {
                          auto fn = sub(0, ctx, a.fn);
                          if (!fn.is_arrow()) {
                            path_.push_back(0);
                            fail("arrow type", fn, "non-arrow applied: term of type " + fn.str() + " used as a function");
                          }
                          expect(ctx, a.arg, 1, fn.domain());
                          return fn.codomain();
                        },
                        [&](const term::Tuple& tu) {
                          std::vector<Type> ts;
                          for (std::size_t i = 0; i < tu.items.size(); ++i) ts.push_back(sub(i, ctx, tu.items[i]));
                          return Type::prod(std::move(ts));
                        },
                        [&](const term::MatchTuple& m) {
                          auto s = sub(0, ctx, m.scrutinee);
                          if (!s.is_prod()) {
                            path_.push_back(0);
                            fail("product type", s, "tuple match on non-product of type " + s.str());
                          }
                          if (s.components().size() != m.vars.size()) {
                            path_.push_back(0);
                            fail("product of width " + std::to_string(m.vars.size()), s,
                                 "arity mismatch: pattern binds " + std::to_string(m.vars.size()) +
                                     " variables but scrutinee has type " + s.str());
                          }
                          Context inner = ctx;
                          for (std::size_t i = 0; i < m.vars.size(); ++i) inner.extend(m.vars[i], s.components()[i]);
                          return sub(1, inner, m.body);
                        },
                        [&](const term::Inject& i) {
                          if (!i.variant.is_variant()) {
                            fail("variant annotation", i.variant, "inj annotated with non-variant type " + i.variant.str());
                          }
                          int idx = i.variant.case_index(i.ctor);
                          if (idx < 0) {
                            fail("constructor of " + i.variant.str(), std::nullopt,
                                 "constructor '" + i.ctor + "' not in annotated variant " + i.variant.str());
                          }
                          expect(ctx, i.payload, 0, i.variant.cases()[static_cast<std::size_t>(idx)].second);
                          return i.variant;
                        },
                        [&](const term::MatchVariant& m) {
                          auto s = sub(0, ctx, m.scrutinee);
                          if (!s.is_variant()) {
                            path_.push_back(0);
                            fail("variant type", s, "case analysis on non-variant of type " + s.str());
                          }
                          std::set<std::string> covered;
                          std::optional<Type> result;
                          for (std::size_t bi = 0; bi < m.branches.size(); ++bi) {
                            const auto& b = m.branches[bi];
                            int idx = s.case_index(b.ctor);
                            if (idx < 0) {
                              path_.push_back(bi + 1);
                              fail("constructor of " + s.str(), std::nullopt,
                                   "extra branch: constructor '" + b.ctor + "' not in " + s.str());
                            }
                            covered.insert(b.ctor);
                            auto bt = sub(bi + 1, ctx.extended(b.var, s.cases()[static_cast<std::size_t>(idx)].second), b.body);
                            if (result && bt != *result) {
                              path_.push_back(bi + 1);
                              fail(result->str(), bt, "case branches disagree: expected " + result->str() + ", found " + bt.str());
                            }
                            result = bt;
                          }
                          for (const auto& [name, _] : s.cases()) {
                            if (!covered.count(name)) {
                              fail("branch for every constructor", std::nullopt, "missing branch for constructor '" + name + "'");
                            }
                          }
                          return *result;
                        },
                        [&](const term::Nil& n) { return Type::list(n.elem); },
                        [&](const term::Cons& c) {
                          auto h = sub(0, ctx, c.head);
                          expect(ctx, c.tail, 1, Type::list(h));
                          return Type::list(h);
                        },
                        [&](const term::Fold& f) {
                          auto over = sub(1, ctx, f.over);
                          if (!over.is_list()) {
                            path_.push_back(1);
                            fail("list type", over, "fold over non-list of type " + over.str());
                          }
                          auto base = sub(2, ctx, f.base);
                          auto inner = ctx.extended(f.head_var, over.element()).extended(f.acc_var, base);
                          auto step = sub(0, inner, f.step);
                          if (step != base) {
                            path_.push_back(0);
                            fail(base.str(), step,
                                 "fold step/base types disagree: base has type " + base.str() + ", step has type " +
                                     step.str());
                          }
                          return base;
                        },
                    });
  }

 private:
  Type sub(std::size_t index, const Context& ctx, const Term& t) {
    path_.push_back(index);
    auto ty = infer(ctx, t);
    path_.pop_back();
    return ty;
  }

  void expect(const Context& ctx, const Term& t, std::size_t index, const Type& want) {
    auto got = sub(index, ctx, t);
    if (got != want) {
      path_.push_back(index);
      fail(want.str(), got, "type mismatch: expected " + want.str() + ", found " + got.str());
    }
  }

  [[noreturn]] void fail(std::string expected, std::optional<Type> found, const std::string& msg) {
    throw TypeError(path_, std::move(expected), std::move(found), msg);
  }

  std::vector<std::size_t> path_;
};

}  // namespace

Type infer(const Context& ctx, const Term& t) { return Checker{}.infer(ctx, t); }

void check(const Context& ctx, const Term& t, const Type& expected) {
  auto got = infer(ctx, t);
  if (got != expected) {
    throw TypeError({}, expected.str(), got, "type mismatch: expected " + expected.str() + ", found " + got.str());
  }
}

TypedUnit check_unit(const SourceUnit& unit) {
  TypedUnit out;
  for (const auto& d : unit.defs) {
    try {
      check(Context{}, d.body, d.type);
    } catch (const TypeError& e) {
      throw TypeError(e.path(), e.expected(), e.found(), "in definition '" + d.name + "': " + e.what());
    }
    out.def_types.push_back(d.type);
  }
  if (unit.main) {
    try {
      out.main_type = infer(Context{}, *unit.main);
    } catch (const TypeError& e) {
      throw TypeError(e.path(), e.expected(), e.found(), std::string("in main term: ") + e.what());
    }
  }
  return out;
}

Term subterm_at(const Term& t, const std::vector<std::size_t>& path) {
  Term cur = t;
  for (auto i : path) cur = children(cur).at(i);
  return cur;
}

}  // namespace adl
