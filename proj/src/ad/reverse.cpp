#include "adl/ad/reverse.hpp"

#include "adl/ad/forward.hpp"
#include "adl/core/ops.hpp"
#include "adl/core/subst.hpp"
#include "structural.hpp"

namespace adl {

namespace {

Term op_clause(const term::PrimOp& p, std::vector<Term> derived, std::size_t k) {
  const auto& op = lookup_op(p.op);
  const auto n = derived.size();
  auto xs = ad::fresh_names("x", n);
  auto dxs = ad::fresh_names("x'", n);

  std::vector<Term> args;
  for (const auto& x : xs) args.push_back(var(x));
  Term value = prim(p.op, args);
  std::string z;
  if (op.binds_result) z = fresh::name("z");
  Term result = op.binds_result ? var(z) : value;

  auto w = fresh::name("w");
  std::vector<Term> contributions;
  for (std::size_t i = 0; i < n; ++i) {
    Term weight = op.weight ? op.weight(i, args, result, var(w)) : mul(op.partials[i](args, result), var(w));
    contributions.push_back(app(var(dxs[i]), weight));
  }
  Term body = tuple({result, lam(w, Type::real(), ad::sum_k(contributions, k))});
  if (op.binds_result) body = let(z, Type::real(), value, body);
  for (std::size_t i = n; i-- > 0;) body = match_tuple(derived[i], {xs[i], dxs[i]}, body);
  return body;
}

Term wrap_real(std::size_t k, const Term& z) {
  auto x = fresh::name("x");
  auto dx = fresh::name("x'");
  auto w = fresh::name("w");
  if (k == 1) return match_tuple(z, {x, dx}, tuple({var(x), lam(w, Type::real(), mul(var(dx), var(w)))}));
  auto comps = ad::fresh_names("x'", k);
  std::vector<Term> scaled;
  for (const auto& c : comps) scaled.push_back(mul(var(c), var(w)));
  return match_tuple(z, {x, dx},
                     match_tuple(var(dx), comps, tuple({var(x), lam(w, Type::real(), tuple(std::move(scaled)))})));
}

Term unwrap_real(const Term& z) {
  auto x = fresh::name("x");
  auto f = fresh::name("f");
  return match_tuple(z, {x, f}, tuple({var(x), app(var(f), constant(1.0))}));
}

enum class Direction { Wrap, Unwrap };

// Both wrappers share their structure on products, variants and lists.
Term convert(Direction dir, const Type& t, std::size_t k, const Term& z) {
  auto rec = [&](const Type& sub, const Term& u) { return convert(dir, sub, k, u); };
  auto target = [&](const Type& ty) { return dir == Direction::Wrap ? derive_type_rev(ty, k) : derive_type_fwd(ty, k); };
  switch (t.kind()) {
    case Type::Kind::Real:
      return dir == Direction::Wrap ? wrap_real(k, z) : unwrap_real(z);
    case Type::Kind::Prod: {
      auto zs = ad::fresh_names("z", t.components().size());
      std::vector<Term> items;
      for (std::size_t i = 0; i < zs.size(); ++i) items.push_back(rec(t.components()[i], var(zs[i])));
      return match_tuple(z, zs, tuple(std::move(items)));
    }
    case Type::Kind::Variant: {
      auto image = target(t);
      std::vector<term::Branch> branches;
      for (const auto& [ctor, payload] : t.cases()) {
        auto v = fresh::name("v");
        branches.push_back({ctor, v, inject(image, ctor, rec(payload, var(v)))});
      }
      return match_variant(z, std::move(branches));
    }
    case Type::Kind::List: {
      auto h = fresh::name("h");
      auto a = fresh::name("a");
      return fold(h, a, cons(rec(t.element(), var(h)), var(a)), z, nil(target(t.element())));
    }
    case Type::Kind::Arrow:
      throw HigherOrderType(t);
  }
  throw std::logic_error("unreachable type kind");
}

}  // namespace

Type derive_type_rev(const Type& t, std::size_t k) {
  ad::require_positive(k);
  return ad::map_reals(t, Type::prod({Type::real(), Type::arrow(Type::real(), Type::real_power(k))}));
}

Context derive_ctx_rev(const Context& ctx, std::size_t k) {
  Context out;
  for (const auto& [name, ty] : ctx.bindings()) out.extend(name, derive_type_rev(ty, k));
  return out;
}

Term derive_term_rev(const Term& t, std::size_t k) {
  ad::require_positive(k);
  ad::MacroClauses m{
      .type = [k](const Type& ty) { return derive_type_rev(ty, k); },
      .constant = [k](double c) { return tuple({constant(c), lam(fresh::name("z"), Type::real(), zero_tangent(k))}); },
      .op = [k](const term::PrimOp& p, std::vector<Term> args) { return op_clause(p, std::move(args), k); },
  };
  return ad::apply_macro(t, m);
}

Term wrap_term(const Type& t, std::size_t k, const Term& z) {
  ad::require_positive(k);
  if (!t.first_order()) throw HigherOrderType(t);
  return convert(Direction::Wrap, t, k, z);
}

Term unwrap_term(const Type& t, std::size_t k, const Term& z) {
  ad::require_positive(k);
  if (!t.first_order()) throw HigherOrderType(t);
  return convert(Direction::Unwrap, t, k, z);
}

Term grad_program(const Term& t, const Context& gamma, const Type& tau, std::size_t k) {
  ad::require_positive(k);
  for (const auto& [name, ty] : gamma.bindings()) {
    if (!ty.first_order()) throw HigherOrderType(ty);
  }
  if (!tau.first_order()) throw HigherOrderType(tau);
  auto g = fresh::name("g");
  auto vs = ad::fresh_names("v", gamma.size());
  Term body = derive_term_rev(t, k);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& [name, ty] = gamma.bindings()[i];
    body = subst(body, name, wrap_term(ty, k, var(vs[i])));
  }
  body = unwrap_term(tau, k, body);
  return lam(g, derive_type_fwd(gamma.as_product(), k), match_tuple(var(g), vs, body));
}

Term grad_function(const Term& f, const Type& fn_type, std::size_t k) {
  ad::require_positive(k);
  if (!fn_type.is_arrow()) throw std::invalid_argument("grad_function needs a function type, got " + fn_type.str());
  const auto& sigma = fn_type.domain();
  const auto& tau = fn_type.codomain();
  if (!sigma.first_order()) throw HigherOrderType(sigma);
  if (!tau.first_order()) throw HigherOrderType(tau);
  auto z = fresh::name("z");
  return lam(z, derive_type_fwd(sigma, k), unwrap_term(tau, k, app(derive_term_rev(f, k), wrap_term(sigma, k, var(z)))));
}

}  // namespace adl
