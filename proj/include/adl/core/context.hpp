#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adl/core/type.hpp"

namespace adl {

/// Ordered typing context. Names are pairwise distinct: extending with a
/// name already present drops the older binding (the inner binder wins).
class Context {
 public:
  using Binding = std::pair<std::string, Type>;

  Context() = default;
  Context(std::initializer_list<Binding> bindings);

  Context extended(const std::string& name, const Type& type) const;
  void extend(const std::string& name, const Type& type);

  std::optional<Type> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup(name).has_value(); }

  const std::vector<Binding>& bindings() const { return bindings_; }
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }

  /// The context read as one product type, in declaration order.
  Type as_product() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Binding> bindings_;
};

}  // namespace adl
