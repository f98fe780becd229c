#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adl/core/term.hpp"

namespace adl {

class UnknownOp : public std::runtime_error {
 public:
  explicit UnknownOp(const std::string& name) : std::runtime_error("unknown primitive operation '" + name + "'") {}
};

/// Registry entry for an n-ary smooth primitive real^n -> real.
///
/// `partials[i](args, result)` builds the term for the i-th partial
/// derivative at `args`. When `binds_result` is set the derivative macros
/// let-bind op(args) once and pass that variable as `result`; otherwise
/// `result` is the term op(args) itself.
///
/// `tangent` and `weight` override the generic forward sum
/// (sum_i tangent_i * d_i op) and the generic reverse weight (d_i op * w)
/// for primitives that have a hand-written clause.
struct OpSig {
  using Partial = std::function<Term(std::span<const Term> args, const Term& result)>;
  using Tangent = std::function<Term(std::span<const Term> args, std::span<const Term> tangents, const Term& result)>;
  using Weight = std::function<Term(std::size_t i, std::span<const Term> args, const Term& result, const Term& w)>;

  std::string name;
  std::size_t arity = 0;
  std::function<double(std::span<const double>)> apply;
  std::vector<Partial> partials;
  bool binds_result = false;
  Tangent tangent;
  Weight weight;

  /// d_i op(args), with the result written out as op(args).
  Term partial(std::size_t i, std::span<const Term> args) const;
};

/// The built-in registry: add, mul, sigmoid, neg, exp, sin, cos, div.
std::span<const OpSig> ops();
const OpSig* find_op(std::string_view name);
/// Throws UnknownOp.
const OpSig& lookup_op(std::string_view name);

double sigmoid(double x);

}  // namespace adl
