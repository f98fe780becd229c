#pragma once

#include <set>
#include <string>
#include <vector>

#include "adl/core/term.hpp"

namespace adl {

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const std::string& x, const Term& t);

/// Capture-avoiding substitution t[u/x]. Binders of t that would capture a
/// free variable of u are renamed to fresh names.
Term subst(const Term& t, const std::string& x, const Term& u);

/// Equality up to consistent renaming of bound variables. Literals are
/// compared bit-for-bit and annotations structurally.
bool alpha_eq(const Term& a, const Term& b);

/// Number of nodes; used by generators and diagnostics.
std::size_t term_size(const Term& t);

/// Immediate subterms, in the order used by type-error paths.
std::vector<Term> children(const Term& t);

}  // namespace adl
