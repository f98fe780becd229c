#include "adl/harness/generate.hpp"

#include "adl/core/fresh.hpp"
#include "adl/core/subst.hpp"

namespace adl {

namespace {

constexpr std::array<std::string_view, 6> kGenOps = {"add", "mul", "sigmoid", "sin", "cos", "neg"};
constexpr std::array<std::string_view, 3> kCtors = {"A", "B", "C"};

}  // namespace

Type TermGen::type(int depth, bool higher_order) {
  if (depth <= 0) return Type::real();
  switch (rng_.index(higher_order ? 6 : 5)) {
    case 0:
    case 1:
      return Type::real();
    case 2: {
      std::vector<Type> cs(rng_.index(4));
      for (auto& c : cs) c = type(depth - 1, higher_order);
      return Type::prod(std::move(cs));
    }
    case 3: {
      std::vector<Type::Case> cs;
      auto n = 1 + rng_.index(kCtors.size());
      for (std::size_t i = 0; i < n; ++i) cs.emplace_back(std::string(kCtors[i]), type(depth - 1, higher_order));
      return Type::variant(std::move(cs));
    }
    case 4:
      return Type::list(type(depth - 1, higher_order));
    default:
      return Type::arrow(type(depth - 1, higher_order), type(depth - 1, higher_order));
  }
}

Term TermGen::term(const Context& ctx, const Type& ty, int depth) {
  std::vector<std::string> vars;
  for (const auto& [name, t] : ctx.bindings()) {
    if (t == ty) vars.push_back(name);
  }
  auto roll = rng_.index(10);
  if (!vars.empty() && roll < 3) return var(vars[rng_.index(vars.size())]);
  if (depth > 0 && roll < 6) return elim(ctx, ty, depth);
  return intro(ctx, ty, depth);
}

Term TermGen::intro(const Context& ctx, const Type& ty, int depth) {
  int next = depth > 0 ? depth - 1 : 0;
  switch (ty.kind()) {
    case Type::Kind::Real: {
      if (depth > 0 && rng_.coin()) {
        auto op = kGenOps[rng_.index(kGenOps.size())];
        std::vector<Term> args;
        std::size_t arity = (op == "add" || op == "mul") ? 2 : 1;
        for (std::size_t i = 0; i < arity; ++i) args.push_back(term(ctx, Type::real(), next));
        return prim(std::string(op), std::move(args));
      }
      return constant(rng_.uniform(kSampleLo, kSampleHi));
    }
    case Type::Kind::Prod: {
      std::vector<Term> items;
      for (const auto& c : ty.components()) items.push_back(term(ctx, c, next));
      return tuple(std::move(items));
    }
    case Type::Kind::Arrow: {
      auto x = fresh::name("x");
      return lam(x, ty.domain(), term(ctx.extended(x, ty.domain()), ty.codomain(), next));
    }
    case Type::Kind::Variant: {
      const auto& c = ty.cases()[rng_.index(ty.cases().size())];
      return inject(ty, c.first, term(ctx, c.second, next));
    }
    case Type::Kind::List: {
      if (depth <= 0 || rng_.coin(0.3)) return nil(ty.element());
      return cons(term(ctx, ty.element(), next), term(ctx, ty, next));
    }
  }
  return constant(0.0);
}

Term TermGen::elim(const Context& ctx, const Type& ty, int depth) {
  int next = depth - 1;
  switch (rng_.index(4)) {
    case 0: {
      auto dom = type(1, true);
      return app(term(ctx, Type::arrow(dom, ty), next), term(ctx, dom, next));
    }
    case 1: {
      std::vector<Type> cs(1 + rng_.index(3));
      for (auto& c : cs) c = type(1, false);
      std::vector<std::string> xs;
      Context inner = ctx;
      for (const auto& c : cs) {
        xs.push_back(fresh::name("p"));
        inner.extend(xs.back(), c);
      }
      auto scrut = term(ctx, Type::prod(cs), next);
      return match_tuple(scrut, std::move(xs), term(inner, ty, next));
    }
    case 2: {
      auto vt = type(1, false);
      if (!vt.is_variant()) vt = Type::variant({{"A", vt}, {"B", Type::unit()}});
      auto scrut = term(ctx, vt, next);
      std::vector<term::Branch> bs;
      for (const auto& [ctor, payload] : vt.cases()) {
        auto v = fresh::name("v");
        bs.push_back({ctor, v, term(ctx.extended(v, payload), ty, next)});
      }
      return match_variant(scrut, std::move(bs));
    }
    default: {
      auto elem = type(1, false);
      auto h = fresh::name("h");
      auto a = fresh::name("a");
      auto step = term(ctx.extended(h, elem).extended(a, ty), ty, next);
      return fold(h, a, step, term(ctx, Type::list(elem), next), term(ctx, ty, next));
    }
  }
}

std::string_view beta_rule_name(BetaRule r) {
  switch (r) {
    case BetaRule::Function:
      return "function";
    case BetaRule::Tuple:
      return "tuple-match";
    case BetaRule::Variant:
      return "variant-match";
    case BetaRule::FoldNil:
      return "fold-nil";
    case BetaRule::FoldCons:
      return "fold-cons";
  }
  return "?";
}

BetaInstance beta_instance(BetaRule rule, Rng& rng, int depth) {
  TermGen gen(rng);
  auto ty = gen.type(2, false);
  switch (rule) {
    case BetaRule::Function: {
      auto sigma = gen.type(2, true);
      auto x = fresh::name("x");
      auto body = gen.term(Context{{x, sigma}}, ty, depth);
      auto arg = gen.term({}, sigma, depth);
      return {app(lam(x, sigma, body), arg), subst(body, x, arg), ty};
    }
    case BetaRule::Tuple: {
      std::vector<Type> cs(rng.index(4));
      for (auto& c : cs) c = gen.type(1, true);
      std::vector<std::string> xs;
      std::vector<Term> items;
      Context inner;
      for (const auto& c : cs) {
        xs.push_back(fresh::name("p"));
        inner.extend(xs.back(), c);
        items.push_back(gen.term({}, c, depth));
      }
      auto body = gen.term(inner, ty, depth);
      Term reduced = body;
      for (std::size_t i = 0; i < xs.size(); ++i) reduced = subst(reduced, xs[i], items[i]);
      return {match_tuple(tuple(items), xs, body), reduced, ty};
    }
    case BetaRule::Variant: {
      auto vt = gen.type(2, true);
      if (!vt.is_variant()) vt = Type::variant({{"A", vt}, {"B", Type::real()}});
      std::vector<term::Branch> bs;
      for (const auto& [ctor, payload] : vt.cases()) {
        auto v = fresh::name("v");
        bs.push_back({ctor, v, gen.term(Context{{v, payload}}, ty, depth)});
      }
      auto pick = rng.index(vt.cases().size());
      auto payload = gen.term({}, vt.cases()[pick].second, depth);
      return {match_variant(inject(vt, bs[pick].ctor, payload), bs), subst(bs[pick].body, bs[pick].var, payload), ty};
    }
    case BetaRule::FoldNil: {
      auto elem = gen.type(1, true);
      auto h = fresh::name("h");
      auto a = fresh::name("a");
      auto step = gen.term(Context{{h, elem}, {a, ty}}, ty, depth);
      auto base = gen.term({}, ty, depth);
      return {fold(h, a, step, nil(elem), base), base, ty};
    }
    case BetaRule::FoldCons: {
      auto elem = gen.type(1, true);
      auto h = fresh::name("h");
      auto a = fresh::name("a");
      auto step = gen.term(Context{{h, elem}, {a, ty}}, ty, depth);
      auto base = gen.term({}, ty, depth);
      auto head = gen.term({}, elem, depth);
      auto tail = gen.term({}, Type::list(elem), depth);
      auto rest = fold(h, a, step, tail, base);
      return {fold(h, a, step, cons(head, tail), base), subst(subst(step, h, head), a, rest), ty};
    }
  }
  throw std::invalid_argument("unknown beta rule");
}

}  // namespace adl
