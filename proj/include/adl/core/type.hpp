#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace adl {

/// Object-language types: real, n-ary products, functions, variants, lists.
///
/// A Type is an immutable handle; copies share structure. Equality is
/// structural (variant cases compared in order, no subtyping).
class Type {
 public:
  enum class Kind { Real, Prod, Arrow, Variant, List };
  using Case = std::pair<std::string, Type>;

  Type();  // real

  static Type real();
  static Type prod(std::vector<Type> components);
  static Type unit() { return prod({}); }
  static Type arrow(Type domain, Type codomain);
  /// Throws std::invalid_argument on an empty case list or duplicate names.
  static Type variant(std::vector<Case> cases);
  static Type list(Type element);
  /// k-ary product of reals, with real^1 = real.
  static Type real_power(std::size_t k);

  Kind kind() const;
  bool is_real() const { return kind() == Kind::Real; }
  bool is_prod() const { return kind() == Kind::Prod; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_variant() const { return kind() == Kind::Variant; }
  bool is_list() const { return kind() == Kind::List; }

  const std::vector<Type>& components() const;
  const Type& domain() const;
  const Type& codomain() const;
  const std::vector<Case>& cases() const;
  const Type& element() const;

  /// Index of a constructor in a variant, or -1.
  int case_index(const std::string& ctor) const;

  /// True if no Arrow occurs anywhere inside.
  bool first_order() const;

  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Type& t);

}  // namespace adl
