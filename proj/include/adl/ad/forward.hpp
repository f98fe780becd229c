#pragma once

#include <cstddef>

#include "adl/core/context.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"

namespace adl {

/// Forward-mode macro on types: real becomes real x real^k, every other
/// former is mapped to itself. k = 1 gives plain dual numbers.
Type derive_type_fwd(const Type& t, std::size_t k);

Context derive_ctx_fwd(const Context& ctx, std::size_t k);

/// Forward-mode macro on terms. Output is not simplified. Throws UnknownOp
/// for primitives missing from the registry and std::invalid_argument for k = 0.
Term derive_term_fwd(const Term& t, std::size_t k);

/// The zero element of real^k: 0.0 for k = 1, a k-tuple of 0.0 otherwise.
Term zero_tangent(std::size_t k);

}  // namespace adl
