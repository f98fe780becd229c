#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adl/core/type.hpp"
#include "adl/eval/value.hpp"

namespace adl {

/// One step into a closure-free value: a tuple component, a variant
/// payload or a list element.
struct SlotStep {
  enum class Kind { Index, Tag, Elem };
  Kind kind;
  std::size_t index = 0;
  std::string ctor;

  friend bool operator==(const SlotStep&, const SlotStep&) = default;
};

using SlotPath = std::vector<SlotStep>;

/// "$.0.1", "$.Just", "$[2]"; "$" for the value itself.
std::string slot_str(const SlotPath& path);

/// Every real position, depth-first left to right. Throws EvalError on closures.
std::vector<SlotPath> real_slots(const Value& v);

/// The reals of v in slot order.
std::vector<double> reals_of(const Value& v);

/// v with its reals replaced, in slot order, by `reals`.
Value with_reals(const Value& v, const std::vector<double>& reals);

/// Turns every real r into (r, t) where t is the slot's tangent: a plain
/// real when k = 1, a k-tuple otherwise. `tangents` is indexed in slot
/// order and each entry must have k reals.
Value with_tangents(const Value& v, std::size_t k, const std::vector<std::vector<double>>& tangents);

/// Tangents that put slot i on basis vector i of real^n.
std::vector<std::vector<double>> one_hot(std::size_t n);

struct SplitValue {
  Value primal;
  std::vector<std::vector<double>> tangents;  // per slot of primal, k each
};

/// Inverse of with_tangents for a value of type D^k(t).
SplitValue split_tangents(const Value& dual, const Type& t, std::size_t k);

}  // namespace adl
