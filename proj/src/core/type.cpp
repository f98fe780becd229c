#include "adl/core/type.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adl {

struct Type::Node {
  Kind kind = Kind::Real;
  std::vector<Type> components;  // Prod; Arrow (domain, codomain); List (element)
  std::vector<Case> cases;       // Variant
};

Type::Type() : node_(nullptr) {}

Type Type::real() { return Type(); }

Type Type::prod(std::vector<Type> components) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->components = std::move(components);
  return Type(std::move(n));
}

Type Type::arrow(Type domain, Type codomain) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->components = {std::move(domain), std::move(codomain)};
  return Type(std::move(n));
}

Type Type::variant(std::vector<Case> cases) {
  if (cases.empty()) throw std::invalid_argument("variant type needs at least one case");
  std::set<std::string> seen;
  for (const auto& [name, _] : cases) {
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate constructor '" + name + "' in variant");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variant;
  n->cases = std::move(cases);
  return Type(std::move(n));
}

Type Type::list(Type element) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::List;
  n->components = {std::move(element)};
  return Type(std::move(n));
}

Type Type::real_power(std::size_t k) {
  if (k == 1) return real();
  return prod(std::vector<Type>(k, real()));
}

Type::Kind Type::kind() const { return node_ ? node_->kind : Kind::Real; }

const std::vector<Type>& Type::components() const {
  if (!is_prod()) throw std::logic_error("components() on non-product type " + str());
  return node_->components;
}

const Type& Type::domain() const {
  if (!is_arrow()) throw std::logic_error("domain() on non-arrow type " + str());
  return node_->components[0];
}

const Type& Type::codomain() const {
  if (!is_arrow()) throw std::logic_error("codomain() on non-arrow type " + str());
  return node_->components[1];
}

const std::vector<Type::Case>& Type::cases() const {
  if (!is_variant()) throw std::logic_error("cases() on non-variant type " + str());
  return node_->cases;
}

const Type& Type::element() const {
  if (!is_list()) throw std::logic_error("element() on non-list type " + str());
  return node_->components[0];
}

int Type::case_index(const std::string& ctor) const {
  const auto& cs = cases();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].first == ctor) return static_cast<int>(i);
  }
  return -1;
}

bool Type::first_order() const {
  switch (kind()) {
    case Kind::Real: return true;
    case Kind::Arrow: return false;
    case Kind::List: return element().first_order();
    case Kind::Prod:
      for (const auto& c : components()) {
        if (!c.first_order()) return false;
      }
      return true;
    case Kind::Variant:
      for (const auto& [_, t] : cases()) {
        if (!t.first_order()) return false;
      }
      return true;
  }
  return true;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::Real: return true;
    case Type::Kind::Prod:
    case Type::Kind::Arrow:
    case Type::Kind::List: return a.node_->components == b.node_->components;
    case Type::Kind::Variant: return a.node_->cases == b.node_->cases;
  }
  return false;
}

namespace {

// Arrow is right-associative and binds loosest; `list` takes an atomic operand.
void print(std::ostream& os, const Type& t, bool atomic) {
  switch (t.kind()) {
    case Type::Kind::Real: os << "real"; return;
    case Type::Kind::Prod: {
      const auto& cs = t.components();
      os << '(';
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ", ";
        print(os, cs[i], false);
      }
      if (cs.size() == 1) os << ',';
      os << ')';
      return;
    }
    case Type::Kind::Arrow:
      if (atomic) os << '(';
      print(os, t.domain(), true);
      os << " -> ";
      print(os, t.codomain(), false);
      if (atomic) os << ')';
      return;
    case Type::Kind::Variant: {
      os << '<';
      bool first = true;
      for (const auto& [name, ct] : t.cases()) {
        os << (first ? " " : " | ") << name << ": ";
        print(os, ct, false);
        first = false;
      }
      os << " >";
      return;
    }
    case Type::Kind::List:
      os << "list ";
      print(os, t.element(), true);
      return;
  }
}

}  // namespace

std::string Type::str() const {
  std::ostringstream os;
  print(os, *this, false);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Type& t) { return os << t.str(); }

}  // namespace adl
