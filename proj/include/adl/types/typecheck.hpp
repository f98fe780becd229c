#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adl/core/context.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"

namespace adl {

struct SourceUnit;

/// A typing failure. `path` addresses the offending subterm by child
/// indices (see children()); `expected` is a type or the rule's name.
class TypeError : public std::runtime_error {
 public:
  TypeError(std::vector<std::size_t> path, std::string expected, std::optional<Type> found, const std::string& message);

  const std::vector<std::size_t>& path() const { return path_; }
  const std::string& expected() const { return expected_; }
  const std::optional<Type>& found() const { return found_; }
  std::string path_str() const;

 private:
  std::vector<std::size_t> path_;
  std::string expected_;
  std::optional<Type> found_;
};

/// Syntax-directed inference; every binder is annotated so no unification
/// is needed. Throws TypeError.
Type infer(const Context& ctx, const Term& t);

/// Convenience: infer and compare against `expected`.
void check(const Context& ctx, const Term& t, const Type& expected);

struct TypedUnit {
  std::vector<Type> def_types;
  std::optional<Type> main_type;
};

/// Checks each definition against its declared type and the main term in
/// the empty context. The first failure is rethrown with the definition
/// named in its message.
TypedUnit check_unit(const SourceUnit& unit);

/// The subterm addressed by a TypeError path.
Term subterm_at(const Term& t, const std::vector<std::size_t>& path);

}  // namespace adl
