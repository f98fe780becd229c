#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adl/core/fresh.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"

namespace adl::ad {

// Shared skeleton of both macros: every former except constants and
// primitives is translated homomorphically.
struct MacroClauses {
  std::function<Type(const Type&)> type;
  std::function<Term(double)> constant;
  std::function<Term(const term::PrimOp&, std::vector<Term> derived_args)> op;
};

Term apply_macro(const Term& t, const MacroClauses& m);

Type map_reals(const Type& t, const Type& real_image);

inline void require_positive(std::size_t k) {
  if (k == 0) throw std::invalid_argument("tangent width k must be at least 1");
}

std::vector<std::string> fresh_names(const std::string& base, std::size_t n);

// a + b on real^k, expanded componentwise for k > 1.
Term add_k(const Term& a, const Term& b, std::size_t k);

// Left-associated sum of a non-empty list over real^k.
Term sum_k(const std::vector<Term>& terms, std::size_t k);

}  // namespace adl::ad
