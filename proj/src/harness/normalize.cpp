#include "adl/harness/normalize.hpp"

#include "adl/core/fresh.hpp"
#include "adl/core/subst.hpp"

namespace adl {

namespace {

Term map_children(const Term& t, Term (*f)(const Term&)) {
  return visit(t, overloaded{
                      [&](const term::Var&) { return t; },
                      [&](const term::Const&) { return t; },
                      [&](const term::Nil&) { return t; },
                      [&](const term::PrimOp& p) {
                        std::vector<Term> args;
                        for (const auto& a : p.args) args.push_back(f(a));
                        return prim(p.op, std::move(args));
                      },
                      [&](const term::Lam& l) { return lam(l.var, l.annot, f(l.body)); },
                      [&](const term::App& a) { return app(f(a.fn), f(a.arg)); },
                      [&](const term::Tuple& tu) {
                        std::vector<Term> items;
                        for (const auto& i : tu.items) items.push_back(f(i));
                        return tuple(std::move(items));
                      },
                      [&](const term::MatchTuple& m) { return match_tuple(f(m.scrutinee), m.vars, f(m.body)); },
                      [&](const term::Inject& i) { return inject(i.variant, i.ctor, f(i.payload)); },
                      [&](const term::MatchVariant& m) {
                        std::vector<term::Branch> bs;
                        for (const auto& b : m.branches) bs.push_back({b.ctor, b.var, f(b.body)});
                        return match_variant(f(m.scrutinee), std::move(bs));
                      },
                      [&](const term::Cons& c) { return cons(f(c.head), f(c.tail)); },
                      [&](const term::Fold& fo) { return fold(fo.head_var, fo.acc_var, f(fo.step), f(fo.over), f(fo.base)); },
                  });
}

// Renames the bound names of a tuple match apart from everything else.
std::pair<std::vector<std::string>, Term> rename_apart(const std::vector<std::string>& vars, Term body) {
  std::vector<std::string> out;
  for (const auto& v : vars) {
    auto fresh_v = fresh::name(std::string(fresh::base_of(v)));
    body = subst(body, v, var(fresh_v));
    out.push_back(fresh_v);
  }
  return {out, body};
}

}  // namespace

Term normalize(const Term& t) {
  Term u = map_children(t, normalize);
  if (u.is<term::App>()) {
    const auto& a = u.as<term::App>();
    if (a.fn.is<term::Lam>()) {
      const auto& l = a.fn.as<term::Lam>();
      return normalize(subst(l.body, l.var, a.arg));
    }
  }
  if (u.is<term::MatchTuple>()) {
    const auto& m = u.as<term::MatchTuple>();
    if (m.scrutinee.is<term::Tuple>() && m.scrutinee.as<term::Tuple>().items.size() == m.vars.size()) {
      auto [vars, body] = rename_apart(m.vars, m.body);
      const auto& items = m.scrutinee.as<term::Tuple>().items;
      for (std::size_t i = 0; i < vars.size(); ++i) body = subst(body, vars[i], items[i]);
      return normalize(body);
    }
    if (m.scrutinee.is<term::MatchTuple>()) {
      const auto& inner = m.scrutinee.as<term::MatchTuple>();
      auto [vars, inner_body] = rename_apart(inner.vars, inner.body);
      return normalize(match_tuple(inner.scrutinee, vars, match_tuple(inner_body, m.vars, m.body)));
    }
  }
  return u;
}

}  // namespace adl
