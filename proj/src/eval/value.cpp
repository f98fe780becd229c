#include "adl/eval/value.hpp"

#include <bit>
#include <cstdint>

namespace adl {

Env Env::bind(std::string name, Value value) const {
  return Env(std::make_shared<const Node>(Node{std::move(name), std::move(value), head_}));
}

const Value* Env::lookup(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->next.get()) {
    if (n->name == name) return &n->value;
  }
  return nullptr;
}

Value Value::tuple(std::vector<Value> items) { return Value(Kind::Tuple, Data(std::move(items))); }
Value Value::closure(Closure c) { return Value(Kind::Closure, Data(std::move(c))); }
Value Value::tag(std::string ctor, Value payload) {
  return Value(Kind::Tag, Data(TagData{std::move(ctor), {std::move(payload)}}));
}
Value Value::list(std::vector<Value> items) { return Value(Kind::List, Data(std::move(items))); }

double Value::as_real() const {
  if (kind_ != Kind::Real) throw EvalError("expected a real value");
  return real_;
}

const std::vector<Value>& Value::items() const {
  if (kind_ != Kind::Tuple && kind_ != Kind::List) throw EvalError("expected a tuple or list value");
  return std::get<std::vector<Value>>(*data_);
}

const Closure& Value::as_closure() const {
  if (kind_ != Kind::Closure) throw EvalError("expected a function value");
  return std::get<Closure>(*data_);
}

const std::string& Value::ctor() const {
  if (kind_ != Kind::Tag) throw EvalError("expected a tagged value");
  return std::get<TagData>(*data_).ctor;
}

const Value& Value::payload() const {
  if (kind_ != Kind::Tag) throw EvalError("expected a tagged value");
  return std::get<TagData>(*data_).payload.front();
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Value::Kind::Real:
      return std::bit_cast<std::uint64_t>(a.real_) == std::bit_cast<std::uint64_t>(b.real_);
    case Value::Kind::Tuple:
    case Value::Kind::List:
      return a.items() == b.items();
    case Value::Kind::Closure:
      return a.data_ == b.data_;
    case Value::Kind::Tag:
      return a.ctor() == b.ctor() && a.payload() == b.payload();
  }
  return false;
}

}  // namespace adl
