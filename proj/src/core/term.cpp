#include "adl/core/term.hpp"

#include <set>
#include <stdexcept>

namespace adl {

namespace {

Term make(term::Variant v) { return Term(std::make_shared<const term::Node>(term::Node{std::move(v)})); }

}  // namespace

Term var(std::string name) { return make(term::Var{std::move(name)}); }

Term constant(double value) { return make(term::Const{value}); }

Term prim(std::string op, std::vector<Term> args) { return make(term::PrimOp{std::move(op), std::move(args)}); }

Term lam(std::string v, Type annot, Term body) {
  return make(term::Lam{std::move(v), std::move(annot), std::move(body)});
}

Term app(Term fn, Term arg) { return make(term::App{std::move(fn), std::move(arg)}); }

Term tuple(std::vector<Term> items) { return make(term::Tuple{std::move(items)}); }

Term match_tuple(Term scrutinee, std::vector<std::string> vars, Term body) {
  return make(term::MatchTuple{std::move(scrutinee), std::move(vars), std::move(body)});
}

Term inject(Type variant, std::string ctor, Term payload) {
  return make(term::Inject{std::move(variant), std::move(ctor), std::move(payload)});
}

Term match_variant(Term scrutinee, std::vector<term::Branch> branches) {
  std::set<std::string> seen;
  for (const auto& b : branches) {
    if (!seen.insert(b.ctor).second) throw std::invalid_argument("duplicate branch for constructor '" + b.ctor + "'");
  }
  return make(term::MatchVariant{std::move(scrutinee), std::move(branches)});
}

Term nil(Type elem) { return make(term::Nil{std::move(elem)}); }

Term cons(Term head, Term tail) { return make(term::Cons{std::move(head), std::move(tail)}); }

Term fold(std::string head_var, std::string acc_var, Term step, Term over, Term base) {
  return make(term::Fold{std::move(head_var), std::move(acc_var), std::move(step), std::move(over), std::move(base)});
}

Term add(Term a, Term b) { return prim("add", {std::move(a), std::move(b)}); }

Term mul(Term a, Term b) { return prim("mul", {std::move(a), std::move(b)}); }

Term sub(Term a, Term b) { return add(std::move(a), mul(constant(-1.0), std::move(b))); }

Term let(std::string x, Type annot, Term bound, Term body) {
  return app(lam(std::move(x), std::move(annot), std::move(body)), std::move(bound));
}

}  // namespace adl
