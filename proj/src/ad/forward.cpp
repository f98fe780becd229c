#include "adl/ad/forward.hpp"

#include "adl/core/ops.hpp"
#include "structural.hpp"

namespace adl {

namespace {

Term tangent_formula(const OpSig& op, std::span<const Term> args, std::span<const Term> tangents, const Term& result) {
  if (op.tangent) return op.tangent(args, tangents, result);
  Term sum = mul(tangents[0], op.partials[0](args, result));
  for (std::size_t i = 1; i < args.size(); ++i) sum = add(sum, mul(tangents[i], op.partials[i](args, result)));
  return sum;
}

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

  Term body;
  std::vector<std::vector<std::string>> comps;
  if (k == 1) {
    std::vector<Term> ds;
    for (const auto& d : dxs) ds.push_back(var(d));
    body = tuple({result, tangent_formula(op, args, ds, result)});
  } else {
    for (std::size_t i = 0; i < n; ++i) comps.push_back(ad::fresh_names("x'", k));
    std::vector<Term> tangent;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Term> ds;
      for (std::size_t i = 0; i < n; ++i) ds.push_back(var(comps[i][j]));
      tangent.push_back(tangent_formula(op, args, ds, result));
    }
    body = tuple({result, tuple(std::move(tangent))});
    for (std::size_t i = n; i-- > 0;) body = match_tuple(var(dxs[i]), comps[i], body);
  }
  if (op.binds_result) body = let(z, Type::real(), value, body);
  for (std::size_t i = n; i-- > 0;) body = match_tuple(derived[i], {xs[i], dxs[i]}, body);
  return body;
}

}  // namespace

Term zero_tangent(std::size_t k) {
  ad::require_positive(k);
  if (k == 1) return constant(0.0);
  return tuple(std::vector<Term>(k, constant(0.0)));
}

Type derive_type_fwd(const Type& t, std::size_t k) {
  ad::require_positive(k);
  return ad::map_reals(t, Type::prod({Type::real(), Type::real_power(k)}));
}

Context derive_ctx_fwd(const Context& ctx, std::size_t k) {
  Context out;
  for (const auto& [name, ty] : ctx.bindings()) out.extend(name, derive_type_fwd(ty, k));
  return out;
}

Term derive_term_fwd(const Term& t, std::size_t k) {
  ad::require_positive(k);
  ad::MacroClauses m{
      .type = [k](const Type& ty) { return derive_type_fwd(ty, k); },
      .constant = [k](double c) { return tuple({constant(c), zero_tangent(k)}); },
      .op = [k](const term::PrimOp& p, std::vector<Term> args) { return op_clause(p, std::move(args), k); },
  };
  return ad::apply_macro(t, m);
}

}  // namespace adl
