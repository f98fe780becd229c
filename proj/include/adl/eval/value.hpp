#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "adl/core/term.hpp"

namespace adl {

class Value;

/// Persistent environment: binding returns a new environment sharing the old one.
class Env {
 public:
  Env() = default;

  Env bind(std::string name, Value value) const;
  const Value* lookup(const std::string& name) const;

 private:
  struct Node;
  explicit Env(std::shared_ptr<const Node> head) : head_(std::move(head)) {}
  std::shared_ptr<const Node> head_;
};

struct Closure {
  std::string var;
  Term body;
  Env env;
};

/// Runtime values: reals, tuples, closures, tagged values and lists.
/// Immutable; copies share structure.
class Value {
 public:
  enum class Kind { Real, Tuple, Closure, Tag, List };

  Value() : Value(0.0) {}
  static Value real(double x) { return Value(x); }
  static Value tuple(std::vector<Value> items);
  static Value closure(Closure c);
  static Value tag(std::string ctor, Value payload);
  static Value list(std::vector<Value> items);

  Kind kind() const { return kind_; }
  bool is_real() const { return kind_ == Kind::Real; }

  double as_real() const;
  /// Components of a tuple or elements of a list.
  const std::vector<Value>& items() const;
  const Closure& as_closure() const;
  const std::string& ctor() const;
  const Value& payload() const;

  /// Structural equality; reals compare bit-for-bit, closures by identity.
  friend bool operator==(const Value& a, const Value& b);

 private:
  struct TagData {
    std::string ctor;
    std::vector<Value> payload;  // exactly one element
  };
  using Data = std::variant<std::vector<Value>, Closure, TagData>;

  explicit Value(double x) : kind_(Kind::Real), real_(x) {}
  Value(Kind kind, Data data) : kind_(kind), data_(std::make_shared<const Data>(std::move(data))) {}

  Kind kind_;
  double real_ = 0.0;
  std::shared_ptr<const Data> data_;
};

struct Env::Node {
  std::string name;
  Value value;
  std::shared_ptr<const Node> next;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adl
