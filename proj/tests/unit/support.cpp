#include "support.hpp"

#include <map>

namespace test {

namespace {

using Renaming = std::map<std::string, std::string>;

std::string fresh_for(Renaming& r, const std::string& x) {
  auto y = adl::fresh::name("r");
  r[x] = y;
  return y;
}

adl::Term go(const adl::Term& t, const Renaming& r) {
  using namespace adl;
  return visit(t, overloaded{
                      [&](const term::Var& v) {
                        auto it = r.find(v.name);
                        return var(it == r.end() ? v.name : it->second);
                      },
                      [&](const term::Const& c) { return constant(c.value); },
                      [&](const term::PrimOp& p) {
                        std::vector<Term> args;
                        for (const auto& a : p.args) args.push_back(go(a, r));
                        return prim(p.op, std::move(args));
                      },
                      [&](const term::Lam& l) {
                        Renaming inner = r;
                        auto x = fresh_for(inner, l.var);
                        return lam(x, l.annot, go(l.body, inner));
                      },
                      [&](const term::App& a) { return app(go(a.fn, r), go(a.arg, r)); },
                      [&](const term::Tuple& tu) {
                        std::vector<Term> items;
                        for (const auto& i : tu.items) items.push_back(go(i, r));
                        return tuple(std::move(items));
                      },
                      [&](const term::MatchTuple& m) {
                        Renaming inner = r;
                        std::vector<std::string> vars;
                        for (const auto& v : m.vars) vars.push_back(fresh_for(inner, v));
                        return match_tuple(go(m.scrutinee, r), std::move(vars), go(m.body, inner));
                      },
                      [&](const term::Inject& i) { return inject(i.variant, i.ctor, go(i.payload, r)); },
                      [&](const term::MatchVariant& m) {
                        std::vector<term::Branch> bs;
                        for (const auto& b : m.branches) {
                          Renaming inner = r;
                          auto x = fresh_for(inner, b.var);
                          bs.push_back({b.ctor, x, go(b.body, inner)});
                        }
                        return match_variant(go(m.scrutinee, r), std::move(bs));
                      },
                      [&](const term::Nil& n) { return nil(n.elem); },
                      [&](const term::Cons& c) { return cons(go(c.head, r), go(c.tail, r)); },
                      [&](const term::Fold& f) {
                        Renaming inner = r;
                        auto h = fresh_for(inner, f.head_var);
                        auto a = fresh_for(inner, f.acc_var);
                        return fold(h, a, go(f.step, inner), go(f.over, r), go(f.base, r));
                      },
                  });
}

}  // namespace

adl::Term rename_binders(const adl::Term& t) { return go(t, {}); }

}  // namespace test
