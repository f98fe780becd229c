#pragma once

#include <string>

#include "adl/core/term.hpp"

namespace adl {

/// Renders a term in the concrete `.adl` syntax. The output re-parses to an
/// alpha-equal term; literals use the shortest round-trip decimal form.
std::string pretty(const Term& t);

/// Shortest decimal that reads back to the same double ("1.5", "-0.0", "1e+20").
std::string format_real(double x);

}  // namespace adl
