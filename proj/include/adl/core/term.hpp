#pragma once

#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "adl/core/type.hpp"

namespace adl {

namespace term {
struct Node;
}

/// Immutable handle to an object-language term. Copies share structure.
class Term {
 public:
  Term() = default;
  explicit Term(std::shared_ptr<const term::Node> node) : node_(std::move(node)) {}

  const term::Node& node() const { return *node_; }
  bool empty() const { return node_ == nullptr; }

  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;

  /// Pointer identity; structural comparison is alpha_eq.
  bool same(const Term& other) const { return node_ == other.node_; }

 private:
  std::shared_ptr<const term::Node> node_;
};

namespace term {

struct Var {
  std::string name;
};
struct Const {
  double value;
};
struct PrimOp {
  std::string op;
  std::vector<Term> args;
};
struct Lam {
  std::string var;
  Type annot;
  Term body;
};
struct App {
  Term fn;
  Term arg;
};
struct Tuple {
  std::vector<Term> items;
};
struct MatchTuple {
  Term scrutinee;
  std::vector<std::string> vars;
  Term body;
};
struct Inject {
  Type variant;
  std::string ctor;
  Term payload;
};
struct Branch {
  std::string ctor;
  std::string var;
  Term body;
};
struct MatchVariant {
  Term scrutinee;
  std::vector<Branch> branches;
};
struct Nil {
  Type elem;
};
struct Cons {
  Term head;
  Term tail;
};
/// fold (head_var, acc_var => step) over `over` from `base`: a right fold.
struct Fold {
  std::string head_var;
  std::string acc_var;
  Term step;
  Term over;
  Term base;
};

using Variant = std::variant<Var, Const, PrimOp, Lam, App, Tuple, MatchTuple, Inject, MatchVariant, Nil, Cons, Fold>;

struct Node {
  Variant v;
};

}  // namespace term

template <class T>
bool Term::is() const {
  return std::holds_alternative<T>(node_->v);
}

template <class T>
const T& Term::as() const {
  return std::get<T>(node_->v);
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class F>
decltype(auto) visit(const Term& t, F&& f) {
  return std::visit(std::forward<F>(f), t.node().v);
}

// Constructors.
Term var(std::string name);
Term constant(double value);
Term prim(std::string op, std::vector<Term> args);
Term lam(std::string var, Type annot, Term body);
Term app(Term fn, Term arg);
Term tuple(std::vector<Term> items);
Term match_tuple(Term scrutinee, std::vector<std::string> vars, Term body);
Term inject(Type variant, std::string ctor, Term payload);
/// Throws std::invalid_argument on duplicate constructor names.
Term match_variant(Term scrutinee, std::vector<term::Branch> branches);
Term nil(Type elem);
Term cons(Term head, Term tail);
Term fold(std::string head_var, std::string acc_var, Term step, Term over, Term base);

// Sugar, desugared on construction.
Term add(Term a, Term b);
Term mul(Term a, Term b);
/// a - b  ==  a + (-1.0) * b
Term sub(Term a, Term b);
/// let x : annot = bound in body  ==  (fun (x : annot) => body) bound
Term let(std::string x, Type annot, Term bound, Term body);

}  // namespace adl
