#pragma once

#include <cstddef>
#include <stdexcept>

#include "adl/core/context.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"

namespace adl {

/// Raised when wrapping or unwrapping meets a function type.
class HigherOrderType : public std::runtime_error {
 public:
  explicit HigherOrderType(const Type& t)
      : std::runtime_error("type " + t.str() + " contains a function type; gradients need first-order types") {}
};

/// Continuation-based reverse macro on types: real becomes
/// real x (real -> real^k); every other former is preserved.
Type derive_type_rev(const Type& t, std::size_t k);

Context derive_ctx_rev(const Context& ctx, std::size_t k);

/// Reverse macro on terms. Each real carries a continuation that maps an
/// output sensitivity to a k-vector of input sensitivities.
Term derive_term_rev(const Term& t, std::size_t k);

/// Embeds z : D^k(t) into the continuation representation D^k_rev(t).
/// Throws HigherOrderType if t contains an arrow.
Term wrap_term(const Type& t, std::size_t k, const Term& z);

/// Retracts z : D^k_rev(t) back to D^k(t) by running each continuation at 1.0.
Term unwrap_term(const Type& t, std::size_t k, const Term& z);

/// For gamma |- t : tau, the closed term
///   fun (g : D^k(gamma as product)) => unwrap(D^k_rev(t)[wrap(g_i)/x_i]).
Term grad_program(const Term& t, const Context& gamma, const Type& tau, std::size_t k);

/// For a closed f : sigma -> tau, the closed term
///   fun (z : D^k(sigma)) => unwrap(D^k_rev(f) (wrap z)).
Term grad_function(const Term& f, const Type& fn_type, std::size_t k);

}  // namespace adl
