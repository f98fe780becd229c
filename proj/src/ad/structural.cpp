#include "structural.hpp"

namespace adl::ad {

Type map_reals(const Type& t, const Type& real_image) {
  switch (t.kind()) {
    case Type::Kind::Real:
      return real_image;
    case Type::Kind::Prod: {
      std::vector<Type> cs;
      for (const auto& c : t.components()) cs.push_back(map_reals(c, real_image));
      return Type::prod(std::move(cs));
    }
    case Type::Kind::Arrow:
      return Type::arrow(map_reals(t.domain(), real_image), map_reals(t.codomain(), real_image));
    case Type::Kind::Variant: {
      std::vector<Type::Case> cs;
      for (const auto& [name, ty] : t.cases()) cs.emplace_back(name, map_reals(ty, real_image));
      return Type::variant(std::move(cs));
    }
    case Type::Kind::List:
      return Type::list(map_reals(t.element(), real_image));
  }
  throw std::logic_error("unreachable type kind");
}

Term apply_macro(const Term& t, const MacroClauses& m) {
  auto rec = [&](const Term& u) { return apply_macro(u, m); };
  return visit(t, overloaded{
                      [&](const term::Var&) { return t; },
                      [&](const term::Const& c) { return m.constant(c.value); },
                      [&](const term::PrimOp& p) {
                        std::vector<Term> args;
                        for (const auto& a : p.args) args.push_back(rec(a));
                        return m.op(p, std::move(args));
                      },
                      [&](const term::Lam& l) { return lam(l.var, m.type(l.annot), rec(l.body)); },
                      [&](const term::App& a) { return app(rec(a.fn), rec(a.arg)); },
                      [&](const term::Tuple& tu) {
                        std::vector<Term> items;
                        for (const auto& i : tu.items) items.push_back(rec(i));
                        return tuple(std::move(items));
                      },
                      [&](const term::MatchTuple& mt) { return match_tuple(rec(mt.scrutinee), mt.vars, rec(mt.body)); },
                      [&](const term::Inject& i) { return inject(m.type(i.variant), i.ctor, rec(i.payload)); },
                      [&](const term::MatchVariant& mv) {
                        std::vector<term::Branch> bs;
                        for (const auto& b : mv.branches) bs.push_back({b.ctor, b.var, rec(b.body)});
                        return match_variant(rec(mv.scrutinee), std::move(bs));
                      },
                      [&](const term::Nil& n) { return nil(m.type(n.elem)); },
                      [&](const term::Cons& c) { return cons(rec(c.head), rec(c.tail)); },
                      [&](const term::Fold& f) {
                        return fold(f.head_var, f.acc_var, rec(f.step), rec(f.over), rec(f.base));
                      },
                  });
}

std::vector<std::string> fresh_names(const std::string& base, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fresh::name(base));
  return out;
}

Term add_k(const Term& a, const Term& b, std::size_t k) {
  if (k == 1) return add(a, b);
  auto as = fresh_names("a", k);
  auto bs = fresh_names("b", k);
  std::vector<Term> sums;
  for (std::size_t j = 0; j < k; ++j) sums.push_back(add(var(as[j]), var(bs[j])));
  return match_tuple(a, as, match_tuple(b, bs, tuple(std::move(sums))));
}

Term sum_k(const std::vector<Term>& terms, std::size_t k) {
  Term acc = terms.at(0);
  for (std::size_t i = 1; i < terms.size(); ++i) acc = add_k(acc, terms[i], k);
  return acc;
}

}  // namespace adl::ad
