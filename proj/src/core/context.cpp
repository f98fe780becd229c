#include "adl/core/context.hpp"

#include <algorithm>

namespace adl {

Context::Context(std::initializer_list<Binding> bindings) {
  for (const auto& [n, t] : bindings) extend(n, t);
}

Context Context::extended(const std::string& name, const Type& type) const {
  Context out = *this;
  out.extend(name, type);
  return out;
}

void Context::extend(const std::string& name, const Type& type) {
  std::erase_if(bindings_, [&](const Binding& b) { return b.first == name; });
  bindings_.emplace_back(name, type);
}

std::optional<Type> Context::lookup(const std::string& name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  return std::nullopt;
}

Type Context::as_product() const {
  std::vector<Type> ts;
  ts.reserve(bindings_.size());
  for (const auto& [_, t] : bindings_) ts.push_back(t);
  return Type::prod(std::move(ts));
}

}  // namespace adl
