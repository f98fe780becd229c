#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "adl/core/term.hpp"
#include "adl/core/type.hpp"
#include "adl/eval/value.hpp"

namespace adl {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a value written in the term syntax restricted to literals,
/// tuples, injections and lists, checked against `expected`. Throws InputError.
Value parse_value(std::string_view text, const Type& expected);

/// Writes v so that parse_value(format_value(v, t), t) == v. Closures
/// print as <function>.
std::string format_value(const Value& v, const Type& t);

}  // namespace adl

namespace adl {

/// The closed literal term denoting a closure-free value of type t.
Term value_term(const Value& v, const Type& t);

}  // namespace adl
