#include "adl/eval/literal.hpp"

#include "adl/core/pretty.hpp"
#include "adl/eval/eval.hpp"
#include "adl/syntax/parser.hpp"
#include "adl/types/typecheck.hpp"

namespace adl {

namespace {

bool is_literal(const Term& t) {
  return visit(t, overloaded{
                      [](const term::Const&) { return true; },
                      [](const term::Tuple& tu) {
                        for (const auto& i : tu.items) {
                          if (!is_literal(i)) return false;
                        }
                        return true;
                      },
                      [](const term::Inject& i) { return is_literal(i.payload); },
                      [](const term::Nil&) { return true; },
                      [](const term::Cons& c) { return is_literal(c.head) && is_literal(c.tail); },
                      [](const auto&) { return false; },
                  });
}

}  // namespace

Value parse_value(std::string_view text, const Type& expected) {
  Term t;
  try {
    t = parse_term(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("malformed input literal: ") + e.what());
  }
  if (!is_literal(t)) throw InputError("input must be a literal built from numbers, tuples, inj, nil, cons and lists");
  try {
    check(Context{}, t, expected);
  } catch (const TypeError& e) {
    throw InputError(std::string("input literal has the wrong type: ") + e.what());
  }
  return eval(t);
}

std::string format_value(const Value& v, const Type& t) {
  switch (v.kind()) {
    case Value::Kind::Real:
      return format_real(v.as_real());
    case Value::Kind::Closure:
      return "<function>";
    case Value::Kind::Tuple: {
      const auto& items = v.items();
      std::string s = "(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ", ";
        s += format_value(items[i], t.is_prod() ? t.components().at(i) : Type::real());
      }
      if (items.size() == 1) s += ",";
      return s + ")";
    }
    case Value::Kind::Tag: {
      Type payload = Type::real();
      if (t.is_variant()) {
        int idx = t.case_index(v.ctor());
        if (idx >= 0) payload = t.cases()[static_cast<std::size_t>(idx)].second;
      }
      return "inj " + v.ctor() + " " + format_value(v.payload(), payload) + " as " + t.str();
    }
    case Value::Kind::List: {
      const auto& items = v.items();
      Type elem = t.is_list() ? t.element() : Type::real();
      if (items.empty()) return "nil[" + elem.str() + "]";
      std::string s = "[";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ", ";
        s += format_value(items[i], elem);
      }
      return s + "]";
    }
  }
  return "?";
}

}  // namespace adl

namespace adl {

Term value_term(const Value& v, const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Real:
      return constant(v.as_real());
    case Type::Kind::Prod: {
      std::vector<Term> items;
      for (std::size_t i = 0; i < t.components().size(); ++i) items.push_back(value_term(v.items().at(i), t.components()[i]));
      return tuple(std::move(items));
    }
    case Type::Kind::Variant: {
      int idx = t.case_index(v.ctor());
      if (idx < 0) throw EvalError("constructor '" + v.ctor() + "' not in " + t.str());
      return inject(t, v.ctor(), value_term(v.payload(), t.cases()[static_cast<std::size_t>(idx)].second));
    }
    case Type::Kind::List: {
      Term out = nil(t.element());
      const auto& items = v.items();
      for (auto it = items.rbegin(); it != items.rend(); ++it) out = cons(value_term(*it, t.element()), out);
      return out;
    }
    case Type::Kind::Arrow:
      break;
  }
  throw EvalError("function values have no literal form");
}

}  // namespace adl
