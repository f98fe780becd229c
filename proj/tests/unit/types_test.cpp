#include "adl/core/pretty.hpp"
#include "adl/core/subst.hpp"
#include "adl/harness/generate.hpp"
#include "adl/harness/random.hpp"
#include "adl/types/typecheck.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adl;
using test::tm;
using test::ty;

namespace {

TypeError type_error(const Context& ctx, const Term& t) {
  try {
    infer(ctx, t);
  } catch (const TypeError& e) {
    return e;
  }
  FAIL("expected a type error");
  return TypeError({}, "", std::nullopt, "");
}

const Type kMaybe = Type::variant({{"Nothing", Type::unit()}, {"Just", Type::real()}});

}  // namespace

TEST_CASE("infer examples") {
  CHECK(infer({}, lam("x", Type::real(), prim("sigmoid", {var("x")}))) == ty("real -> real"));
  CHECK(infer(Context{{"x", Type::real()}}, inject(kMaybe, "Just", var("x"))) == ty("<Nothing: () | Just: real>"));
  CHECK(infer({}, cons(constant(1.0), nil(Type::real()))) == ty("list real"));
  CHECK(infer({}, tuple({})) == Type::unit());
}

TEST_CASE("check_unit on corpus files") {
  auto neuron = test::corpus_unit("neuron");
  CHECK_NOTHROW(check_unit(neuron));
  CHECK(test::corpus_def(neuron, "neuron2").type == ty("((real, real), ((real, real), real)) -> real"));

  auto network = test::corpus_unit("network");
  CHECK_NOTHROW(check_unit(network));
  CHECK(test::corpus_def(network, "layer2").type ==
        ty("(((real, real), ((real, real), real)) -> real) -> ((real, real), (((real, real), real), ((real, real), "
           "real))) -> (real, real)"));

  auto bad = parse("1.0 2.0");
  try {
    check_unit(bad);
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("non-arrow applied") != std::string::npos);
  }
}

TEST_CASE("type errors name the rule and point at the subterm") {
  auto t = app(constant(1.0), constant(2.0));
  auto e = type_error({}, t);
  CHECK(e.expected() == "arrow type");
  CHECK(e.path_str() == "$.0");
  CHECK(alpha_eq(subterm_at(t, e.path()), constant(1.0)));

  CHECK(std::string(type_error({}, var("q")).what()).find("unbound") != std::string::npos);
  CHECK(std::string(type_error({}, prim("add", {constant(1.0)})).what()).find("arity") != std::string::npos);
  CHECK(std::string(type_error({}, match_tuple(tuple({constant(1.0)}), {"a", "b"}, var("a"))).what())
            .find("arity") != std::string::npos);
  CHECK(std::string(type_error({}, inject(kMaybe, "Some", constant(1.0))).what()).find("not in") !=
        std::string::npos);

  auto scrut = inject(kMaybe, "Just", constant(1.0));
  CHECK(std::string(type_error({}, match_variant(scrut, {{"Just", "v", var("v")}})).what()).find("missing") !=
        std::string::npos);
  CHECK(std::string(type_error({}, match_variant(scrut, {{"Just", "v", var("v")}, {"Nothing", "u", var("u")}}))
                        .what())
            .find("disagree") != std::string::npos);
  auto extra = match_variant(
      scrut, {{"Just", "v", var("v")}, {"Nothing", "u", constant(0.0)}, {"Other", "w", constant(0.0)}});
  auto ee = type_error({}, extra);
  CHECK(std::string(ee.what()).find("extra") != std::string::npos);
  CHECK(ee.path_str() == "$.3");

  auto bad_fold = fold("h", "a", tuple({var("a")}), cons(constant(1.0), nil(Type::real())), constant(0.0));
  CHECK(std::string(type_error({}, bad_fold).what()).find("fold step/base") != std::string::npos);
}

TEST_CASE("error paths address real subterms") {
  auto t = tm("fun (x : real) => (x, x)");
  auto bad = app(t, tuple({constant(1.0)}));
  auto e = type_error({}, bad);
  CHECK(e.path_str() == "$.1");
  CHECK(e.found() == ty("(real,)"));
  CHECK_NOTHROW(subterm_at(bad, e.path()));
}

TEST_CASE("weakening") {
  Rng rng(derive_seed(19, "weakening"));
  TermGen gen(rng);
  Context ctx{{"x", Type::real()}, {"f", ty("real -> real")}};
  for (int i = 0; i < 200; ++i) {
    auto type = gen.type(2, true);
    auto t = gen.term(ctx, type, 3);
    REQUIRE(infer(ctx, t) == type);
    auto extra = gen.type(2, true);
    CHECK(infer(ctx.extended("fresh_w", extra), t) == type);
    Context front{{"fresh_v", extra}};
    for (const auto& [n, ty] : ctx.bindings()) front.extend(n, ty);
    CHECK(infer(front, t) == type);
  }
}

TEST_CASE("substitution preserves typing") {
  Rng rng(derive_seed(23, "subst-typing"));
  TermGen gen(rng);
  Context gamma{{"y", Type::real()}, {"g", ty("real -> real")}};
  for (int i = 0; i < 200; ++i) {
    auto sigma = gen.type(1, true);
    auto tau = gen.type(2, true);
    auto t = gen.term(gamma.extended("x", sigma), tau, 3);
    auto u = gen.term(gamma, sigma, 2);
    REQUIRE(infer(gamma, u) == sigma);
    CHECK_MESSAGE(infer(gamma, subst(t, "x", u)) == tau, pretty(t));
  }
}
