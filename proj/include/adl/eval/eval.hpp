#pragma once

#include "adl/core/term.hpp"
#include "adl/eval/value.hpp"

namespace adl {

/// Call-by-value evaluation. Fold is a right fold. Throws EvalError only
/// when the term is ill-typed or has a free variable missing from env.
Value eval(const Env& env, const Term& t);

inline Value eval(const Term& t) { return eval(Env{}, t); }

/// Applies a closure value to an argument.
Value apply(const Value& fn, const Value& arg);

}  // namespace adl
