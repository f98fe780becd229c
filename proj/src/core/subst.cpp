#include "adl/core/subst.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "adl/core/fresh.hpp"

namespace adl {

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto under = [&](std::initializer_list<std::string_view> names, const Term& body) {
    for (auto n : names) bound.emplace_back(n);
    collect_free(body, bound, out);
    bound.resize(bound.size() - names.size());
  };
  visit(t, overloaded{
               [&](const term::Var& v) {
                 if (std::find(bound.begin(), bound.end(), v.name) == bound.end()) out.insert(v.name);
               },
               [&](const term::Const&) {},
               [&](const term::PrimOp& p) {
                 for (const auto& a : p.args) collect_free(a, bound, out);
               },
               [&](const term::Lam& l) { under({l.var}, l.body); },
               [&](const term::App& a) {
                 collect_free(a.fn, bound, out);
                 collect_free(a.arg, bound, out);
               },
               [&](const term::Tuple& tu) {
                 for (const auto& i : tu.items) collect_free(i, bound, out);
               },
               [&](const term::MatchTuple& m) {
                 collect_free(m.scrutinee, bound, out);
                 bound.insert(bound.end(), m.vars.begin(), m.vars.end());
                 collect_free(m.body, bound, out);
                 bound.resize(bound.size() - m.vars.size());
               },
               [&](const term::Inject& i) { collect_free(i.payload, bound, out); },
               [&](const term::MatchVariant& m) {
                 collect_free(m.scrutinee, bound, out);
                 for (const auto& b : m.branches) under({b.var}, b.body);
               },
               [&](const term::Nil&) {},
               [&](const term::Cons& c) {
                 collect_free(c.head, bound, out);
                 collect_free(c.tail, bound, out);
               },
               [&](const term::Fold& f) {
                 under({f.head_var, f.acc_var}, f.step);
                 collect_free(f.over, bound, out);
                 collect_free(f.base, bound, out);
               },
           });
}

struct Substituter {
  const std::string& x;
  const Term& u;
  const std::set<std::string>& fv_u;

  // Renames binders that would capture a free variable of u, then
  // substitutes in the body. A binder equal to x shadows it.
  Term under(std::vector<std::string>& binders, const Term& body) const {
    if (std::find(binders.begin(), binders.end(), x) != binders.end()) return body;
    if (!occurs_free(x, body)) return body;
    Term b = body;
    for (auto& name : binders) {
      if (fv_u.count(name)) {
        auto renamed = fresh::name(name);
        b = subst(b, name, var(renamed));
        name = renamed;
      }
    }
    return (*this)(b);
  }

  Term operator()(const Term& t) const {
    return visit(t, overloaded{
                        [&](const term::Var& v) { return v.name == x ? u : t; },
                        [&](const term::Const&) { return t; },
                        [&](const term::PrimOp& p) {
                          std::vector<Term> args;
                          for (const auto& a : p.args) args.push_back((*this)(a));
                          return prim(p.op, std::move(args));
                        },
                        [&](const term::Lam& l) {
                          std::vector<std::string> bs{l.var};
                          auto body = under(bs, l.body);
                          return lam(bs[0], l.annot, body);
                        },
                        [&](const term::App& a) { return app((*this)(a.fn), (*this)(a.arg)); },
                        [&](const term::Tuple& tu) {
                          std::vector<Term> items;
                          for (const auto& i : tu.items) items.push_back((*this)(i));
                          return tuple(std::move(items));
                        },
                        [&](const term::MatchTuple& m) {
                          auto bs = m.vars;
                          auto body = under(bs, m.body);
                          return match_tuple((*this)(m.scrutinee), std::move(bs), body);
                        },
                        [&](const term::Inject& i) { return inject(i.variant, i.ctor, (*this)(i.payload)); },
                        [&](const term::MatchVariant& m) {
                          std::vector<term::Branch> branches;
                          for (const auto& b : m.branches) {
                            std::vector<std::string> bs{b.var};
                            auto body = under(bs, b.body);
                            branches.push_back({b.ctor, bs[0], body});
                          }
                          return match_variant((*this)(m.scrutinee), std::move(branches));
                        },
                        [&](const term::Nil&) { return t; },
                        [&](const term::Cons& c) { return cons((*this)(c.head), (*this)(c.tail)); },
                        [&](const term::Fold& f) {
                          std::vector<std::string> bs{f.head_var, f.acc_var};
                          auto step = under(bs, f.step);
                          return fold(bs[0], bs[1], step, (*this)(f.over), (*this)(f.base));
                        },
                    });
  }
};

// Bound-variable scopes for both sides, pushed in lockstep.
struct AlphaScopes {
  std::vector<std::string> left, right;

  static long index_of(const std::vector<std::string>& s, const std::string& n) {
    for (long i = static_cast<long>(s.size()) - 1; i >= 0; --i) {
      if (s[static_cast<std::size_t>(i)] == n) return i;
    }
    return -1;
  }
};

bool alpha(const Term& a, const Term& b, AlphaScopes& sc);

bool alpha_all(const std::vector<Term>& as, const std::vector<Term>& bs, AlphaScopes& sc) {
  if (as.size() != bs.size()) return false;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (!alpha(as[i], bs[i], sc)) return false;
  }
  return true;
}

bool alpha_under(const std::vector<std::string>& xs, const Term& a, const std::vector<std::string>& ys, const Term& b,
                 AlphaScopes& sc) {
  if (xs.size() != ys.size()) return false;
  sc.left.insert(sc.left.end(), xs.begin(), xs.end());
  sc.right.insert(sc.right.end(), ys.begin(), ys.end());
  bool ok = alpha(a, b, sc);
  sc.left.resize(sc.left.size() - xs.size());
  sc.right.resize(sc.right.size() - ys.size());
  return ok;
}

bool alpha(const Term& a, const Term& b, AlphaScopes& sc) {
  if (a.node().v.index() != b.node().v.index()) return false;
  return visit(a, overloaded{
                      [&](const term::Var& v) {
                        const auto& w = b.as<term::Var>();
                        auto i = AlphaScopes::index_of(sc.left, v.name);
                        auto j = AlphaScopes::index_of(sc.right, w.name);
                        if (i < 0 && j < 0) return v.name == w.name;
                        return i == j;
                      },
                      [&](const term::Const& c) {
                        return std::bit_cast<std::uint64_t>(c.value) ==
                               std::bit_cast<std::uint64_t>(b.as<term::Const>().value);
                      },
                      [&](const term::PrimOp& p) {
                        const auto& q = b.as<term::PrimOp>();
                        return p.op == q.op && alpha_all(p.args, q.args, sc);
                      },
                      [&](const term::Lam& l) {
                        const auto& m = b.as<term::Lam>();
                        return l.annot == m.annot && alpha_under({l.var}, l.body, {m.var}, m.body, sc);
                      },
                      [&](const term::App& x) {
                        const auto& y = b.as<term::App>();
                        return alpha(x.fn, y.fn, sc) && alpha(x.arg, y.arg, sc);
                      },
                      [&](const term::Tuple& x) { return alpha_all(x.items, b.as<term::Tuple>().items, sc); },
                      [&](const term::MatchTuple& x) {
                        const auto& y = b.as<term::MatchTuple>();
                        return alpha(x.scrutinee, y.scrutinee, sc) && alpha_under(x.vars, x.body, y.vars, y.body, sc);
                      },
                      [&](const term::Inject& x) {
                        const auto& y = b.as<term::Inject>();
                        return x.variant == y.variant && x.ctor == y.ctor && alpha(x.payload, y.payload, sc);
                      },
                      [&](const term::MatchVariant& x) {
                        const auto& y = b.as<term::MatchVariant>();
                        if (x.branches.size() != y.branches.size() || !alpha(x.scrutinee, y.scrutinee, sc)) return false;
                        for (std::size_t i = 0; i < x.branches.size(); ++i) {
                          const auto& bx = x.branches[i];
                          const auto& by = y.branches[i];
                          if (bx.ctor != by.ctor || !alpha_under({bx.var}, bx.body, {by.var}, by.body, sc)) return false;
                        }
                        return true;
                      },
                      [&](const term::Nil& x) { return x.elem == b.as<term::Nil>().elem; },
                      [&](const term::Cons& x) {
                        const auto& y = b.as<term::Cons>();
                        return alpha(x.head, y.head, sc) && alpha(x.tail, y.tail, sc);
                      },
                      [&](const term::Fold& x) {
                        const auto& y = b.as<term::Fold>();
                        return alpha(x.over, y.over, sc) && alpha(x.base, y.base, sc) &&
                               alpha_under({x.head_var, x.acc_var}, x.step, {y.head_var, y.acc_var}, y.step, sc);
                      },
                  });
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const std::string& x, const Term& t) { return free_vars(t).count(x) > 0; }

Term subst(const Term& t, const std::string& x, const Term& u) {
  if (!occurs_free(x, t)) return t;
  auto fv = free_vars(u);
  return Substituter{x, u, fv}(t);
}

bool alpha_eq(const Term& a, const Term& b) {
  AlphaScopes sc;
  return alpha(a, b, sc);
}

std::vector<Term> children(const Term& t) {
  return visit(t, overloaded{
                      [](const term::Var&) { return std::vector<Term>{}; },
                      [](const term::Const&) { return std::vector<Term>{}; },
                      [](const term::PrimOp& p) { return p.args; },
                      [](const term::Lam& l) { return std::vector<Term>{l.body}; },
                      [](const term::App& a) { return std::vector<Term>{a.fn, a.arg}; },
                      [](const term::Tuple& tu) { return tu.items; },
                      [](const term::MatchTuple& m) { return std::vector<Term>{m.scrutinee, m.body}; },
                      [](const term::Inject& i) { return std::vector<Term>{i.payload}; },
                      [](const term::MatchVariant& m) {
                        std::vector<Term> out{m.scrutinee};
                        for (const auto& b : m.branches) out.push_back(b.body);
                        return out;
                      },
                      [](const term::Nil&) { return std::vector<Term>{}; },
                      [](const term::Cons& c) { return std::vector<Term>{c.head, c.tail}; },
                      [](const term::Fold& f) { return std::vector<Term>{f.step, f.over, f.base}; },
                  });
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const auto& c : children(t)) n += term_size(c);
  return n;
}

}  // namespace adl
