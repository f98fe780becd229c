#pragma once

#include "adl/core/term.hpp"

namespace adl {

/// Beta-reduces applied lambdas and tuple matches on literal tuples, and
/// floats nested tuple matches outward:
///   match (match s with xs => b) with ys => c  ~>  match s with xs => match b with ys => c
/// Used to make macro output readable in golden tests; the macros never call it.
Term normalize(const Term& t);

}  // namespace adl
