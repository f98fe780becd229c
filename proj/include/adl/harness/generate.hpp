#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "adl/core/context.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"
#include "adl/harness/random.hpp"

namespace adl {

/// Random well-typed terms for property tests. Primitives are drawn from
/// the total, bounded subset add, mul, sigmoid, sin, cos, neg.
class TermGen {
 public:
  explicit TermGen(Rng& rng) : rng_(rng) {}

  /// A random type of bounded depth; arrows only when `higher_order`.
  Type type(int depth, bool higher_order);

  /// A term t with ctx |- t : ty, using at most `depth` nested eliminations.
  Term term(const Context& ctx, const Type& ty, int depth);

 private:
  Term intro(const Context& ctx, const Type& ty, int depth);
  Term elim(const Context& ctx, const Type& ty, int depth);

  Rng& rng_;
};

enum class BetaRule { Function, Tuple, Variant, FoldNil, FoldCons };

inline constexpr std::array<BetaRule, 5> kBetaRules = {BetaRule::Function, BetaRule::Tuple, BetaRule::Variant,
                                                       BetaRule::FoldNil, BetaRule::FoldCons};

std::string_view beta_rule_name(BetaRule r);

struct BetaInstance {
  Term redex;
  Term contractum;
  Type type;  // first-order
};

/// A closed, well-typed instance of one beta rule.
BetaInstance beta_instance(BetaRule rule, Rng& rng, int depth = 2);

}  // namespace adl
