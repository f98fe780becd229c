#include "adl/core/ops.hpp"

#include <cmath>

namespace adl {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Term OpSig::partial(std::size_t i, std::span<const Term> args) const {
  return partials.at(i)(args, prim(name, {args.begin(), args.end()}));
}

namespace {

Term one_minus(const Term& z) { return sub(constant(1.0), z); }

std::vector<OpSig> build_registry() {
  std::vector<OpSig> reg;

  reg.push_back(OpSig{
      .name = "add",
      .arity = 2,
      .apply = [](std::span<const double> a) { return a[0] + a[1]; },
      .partials = {[](auto, const Term&) { return constant(1.0); }, [](auto, const Term&) { return constant(1.0); }},
      .tangent = [](auto, std::span<const Term> d, const Term&) { return add(d[0], d[1]); },
      .weight = [](std::size_t, auto, const Term&, const Term& w) { return w; },
  });

  reg.push_back(OpSig{
      .name = "mul",
      .arity = 2,
      .apply = [](std::span<const double> a) { return a[0] * a[1]; },
      .partials = {[](std::span<const Term> x, const Term&) { return x[1]; },
                   [](std::span<const Term> x, const Term&) { return x[0]; }},
      // x * y' + x' * y
      .tangent = [](std::span<const Term> x, std::span<const Term> d,
                    const Term&) { return add(mul(x[0], d[1]), mul(d[0], x[1])); },
  });

  reg.push_back(OpSig{
      .name = "sigmoid",
      .arity = 1,
      .apply = [](std::span<const double> a) { return sigmoid(a[0]); },
      .partials = {[](auto, const Term& z) { return mul(z, one_minus(z)); }},
      .binds_result = true,
      // x' * z * (1 - z)
      .tangent = [](auto, std::span<const Term> d, const Term& z) { return mul(mul(d[0], z), one_minus(z)); },
  });

  reg.push_back(OpSig{
      .name = "neg",
      .arity = 1,
      .apply = [](std::span<const double> a) { return -a[0]; },
      .partials = {[](auto, const Term&) { return constant(-1.0); }},
  });

  reg.push_back(OpSig{
      .name = "exp",
      .arity = 1,
      .apply = [](std::span<const double> a) { return std::exp(a[0]); },
      .partials = {[](auto, const Term& z) { return z; }},
      .binds_result = true,
  });

  reg.push_back(OpSig{
      .name = "sin",
      .arity = 1,
      .apply = [](std::span<const double> a) { return std::sin(a[0]); },
      .partials = {[](std::span<const Term> x, const Term&) { return prim("cos", {x[0]}); }},
  });

  reg.push_back(OpSig{
      .name = "cos",
      .arity = 1,
      .apply = [](std::span<const double> a) { return std::cos(a[0]); },
      .partials = {[](std::span<const Term> x, const Term&) { return prim("neg", {prim("sin", {x[0]})}); }},
  });

  // IEEE semantics at zero divisors.
  reg.push_back(OpSig{
      .name = "div",
      .arity = 2,
      .apply = [](std::span<const double> a) { return a[0] / a[1]; },
      .partials = {[](std::span<const Term> x, const Term&) { return prim("div", {constant(1.0), x[1]}); },
                   [](std::span<const Term> x, const Term& z) { return prim("neg", {prim("div", {z, x[1]})}); }},
      .binds_result = true,
  });

  return reg;
}

const std::vector<OpSig>& registry() {
  static const std::vector<OpSig> reg = build_registry();
  return reg;
}

}  // namespace

std::span<const OpSig> ops() { return registry(); }

const OpSig* find_op(std::string_view name) {
  for (const auto& op : registry()) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

const OpSig& lookup_op(std::string_view name) {
  if (const auto* op = find_op(name)) return *op;
  throw UnknownOp(std::string(name));
}

}  // namespace adl
