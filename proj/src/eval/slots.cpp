#include "adl/eval/slots.hpp"

namespace adl {

namespace {

void collect(const Value& v, SlotPath& path, std::vector<SlotPath>& out) {
  switch (v.kind()) {
    case Value::Kind::Real:
      out.push_back(path);
      return;
    case Value::Kind::Tuple:
    case Value::Kind::List: {
      auto kind = v.kind() == Value::Kind::Tuple ? SlotStep::Kind::Index : SlotStep::Kind::Elem;
      for (std::size_t i = 0; i < v.items().size(); ++i) {
        path.push_back({kind, i, {}});
        collect(v.items()[i], path, out);
        path.pop_back();
      }
      return;
    }
    case Value::Kind::Tag:
      path.push_back({SlotStep::Kind::Tag, 0, v.ctor()});
      collect(v.payload(), path, out);
      path.pop_back();
      return;
    case Value::Kind::Closure:
      throw EvalError("value contains a function; it has no real slots");
  }
}

// Rebuilds v bottom-up, replacing each real through `leaf`.
template <class Leaf>
Value rebuild(const Value& v, Leaf& leaf) {
  switch (v.kind()) {
    case Value::Kind::Real:
      return leaf(v.as_real());
    case Value::Kind::Tuple:
    case Value::Kind::List: {
      std::vector<Value> items;
      items.reserve(v.items().size());
      for (const auto& i : v.items()) items.push_back(rebuild(i, leaf));
      return v.kind() == Value::Kind::Tuple ? Value::tuple(std::move(items)) : Value::list(std::move(items));
    }
    case Value::Kind::Tag:
      return Value::tag(v.ctor(), rebuild(v.payload(), leaf));
    case Value::Kind::Closure:
      throw EvalError("value contains a function; it has no real slots");
  }
  throw EvalError("unreachable value kind");
}

void split(const Value& d, const Type& t, std::size_t k, SplitValue& out, Value& primal) {
  switch (t.kind()) {
    case Type::Kind::Real: {
      if (d.kind() != Value::Kind::Tuple || d.items().size() != 2) throw EvalError("expected a (value, tangent) pair");
      primal = d.items()[0];
      const auto& tan = d.items()[1];
      std::vector<double> ts;
      if (k == 1) {
        ts.push_back(tan.as_real());
      } else {
        if (tan.kind() != Value::Kind::Tuple || tan.items().size() != k) throw EvalError("tangent has the wrong width");
        for (const auto& x : tan.items()) ts.push_back(x.as_real());
      }
      out.tangents.push_back(std::move(ts));
      return;
    }
    case Type::Kind::Prod: {
      if (d.kind() != Value::Kind::Tuple || d.items().size() != t.components().size()) {
        throw EvalError("tuple of the wrong width");
      }
      std::vector<Value> items(t.components().size());
      for (std::size_t i = 0; i < items.size(); ++i) split(d.items()[i], t.components()[i], k, out, items[i]);
      primal = Value::tuple(std::move(items));
      return;
    }
    case Type::Kind::Variant: {
      int idx = t.case_index(d.ctor());
      if (idx < 0) throw EvalError("constructor '" + d.ctor() + "' not in " + t.str());
      Value inner;
      split(d.payload(), t.cases()[static_cast<std::size_t>(idx)].second, k, out, inner);
      primal = Value::tag(d.ctor(), inner);
      return;
    }
    case Type::Kind::List: {
      if (d.kind() != Value::Kind::List) throw EvalError("expected a list");
      std::vector<Value> items(d.items().size());
      for (std::size_t i = 0; i < items.size(); ++i) split(d.items()[i], t.element(), k, out, items[i]);
      primal = Value::list(std::move(items));
      return;
    }
    case Type::Kind::Arrow:
      throw EvalError("cannot split tangents of a function value");
  }
}

}  // namespace

std::string slot_str(const SlotPath& path) {
  std::string s = "$";
  for (const auto& step : path) {
    switch (step.kind) {
      case SlotStep::Kind::Index:
        s += "." + std::to_string(step.index);
        break;
      case SlotStep::Kind::Tag:
        s += "." + step.ctor;
        break;
      case SlotStep::Kind::Elem:
        s += "[" + std::to_string(step.index) + "]";
        break;
    }
  }
  return s;
}

std::vector<SlotPath> real_slots(const Value& v) {
  std::vector<SlotPath> out;
  SlotPath path;
  collect(v, path, out);
  return out;
}

std::vector<double> reals_of(const Value& v) {
  std::vector<double> out;
  auto leaf = [&](double x) {
    out.push_back(x);
    return Value::real(x);
  };
  rebuild(v, leaf);
  return out;
}

Value with_reals(const Value& v, const std::vector<double>& reals) {
  std::size_t next = 0;
  auto leaf = [&](double) {
    if (next >= reals.size()) throw EvalError("too few reals for the value's slots");
    return Value::real(reals[next++]);
  };
  auto out = rebuild(v, leaf);
  if (next != reals.size()) throw EvalError("too many reals for the value's slots");
  return out;
}

Value with_tangents(const Value& v, std::size_t k, const std::vector<std::vector<double>>& tangents) {
  if (k == 0) throw EvalError("tangent width k must be at least 1");
  std::size_t next = 0;
  auto leaf = [&](double x) {
    if (next >= tangents.size()) throw EvalError("no tangent given for slot " + std::to_string(next));
    const auto& t = tangents[next++];
    if (t.size() != k) throw EvalError("tangent for a slot must have " + std::to_string(k) + " components");
    Value tan;
    if (k == 1) {
      tan = Value::real(t[0]);
    } else {
      std::vector<Value> cs;
      for (double c : t) cs.push_back(Value::real(c));
      tan = Value::tuple(std::move(cs));
    }
    return Value::tuple({Value::real(x), tan});
  };
  auto out = rebuild(v, leaf);
  if (next != tangents.size()) throw EvalError("more tangents than real slots");
  return out;
}

std::vector<std::vector<double>> one_hot(std::size_t n) {
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

SplitValue split_tangents(const Value& dual, const Type& t, std::size_t k) {
  SplitValue out;
  split(dual, t, k, out, out.primal);
  return out;
}

}  // namespace adl
