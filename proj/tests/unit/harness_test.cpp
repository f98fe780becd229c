#include <cmath>
#include <filesystem>
#include <fstream>

#include "adl/core/ops.hpp"
#include "adl/core/pretty.hpp"
#include "adl/core/subst.hpp"
#include "adl/eval/literal.hpp"
#include "adl/harness/checks.hpp"
#include "adl/harness/generate.hpp"
#include "adl/harness/jacobian.hpp"
#include "adl/harness/normalize.hpp"
#include "adl/harness/random.hpp"
#include "adl/harness/suite.hpp"
#include "adl/types/typecheck.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace adl;
using test::tm;
using test::ty;

namespace fs = std::filesystem;

namespace {

Program prog(const char* name, const char* src, const char* type) { return {name, tm(src), ty(type)}; }

Program corpus_program(const std::string& stem, const std::string& entry) {
  auto unit = test::corpus_unit(stem);
  const auto& d = test::corpus_def(unit, entry);
  return {stem + "/" + entry, d.body, d.type};
}

double analytic_sigmoid_prime(double x) {
  double e = std::exp(-x);
  return e / ((1.0 + e) * (1.0 + e));
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& file, const std::string& text) const { std::ofstream(path / file) << text; }
};

}  // namespace

TEST_CASE("finite-difference oracle self-checks") {
  auto sq = prog("sq", "fun (x : real) => x * x", "real -> real");
  CHECK(std::abs(fd_partial(sq, Value::real(3.0), 0, 0) - 6.0) <= 1e-6);

  auto c = prog("c", "fun (x : real) => 4.0", "real -> real");
  CHECK(std::abs(fd_partial(c, Value::real(1.3), 0, 0)) <= 1e-9);

  auto sig = prog("sig", "fun (x : real) => sigmoid(x)", "real -> real");
  CHECK(std::abs(fd_partial(sig, Value::real(0.0), 0, 0) - 0.25) <= 1e-6);
  for (double x : {-1.7, -0.3, 0.9, 1.6}) {
    CHECK(std::abs(fd_partial(sig, Value::real(x), 0, 0) - analytic_sigmoid_prime(x)) <= 1e-6);
  }
}

TEST_CASE("finite differences obey the chain rule") {
  auto f = prog("f", "fun (x : real) => sin(x) + x * x", "real -> real");
  auto g = prog("g", "fun (y : real) => y * sigmoid(y)", "real -> real");
  auto gf = prog("gf", "fun (x : real) => (fun (y : real) => y * sigmoid(y)) (sin(x) + x * x)", "real -> real");
  Rng rng(derive_seed(53, "chain-rule"));
  for (int i = 0; i < 20; ++i) {
    double x = rng.uniform(kSampleLo, kSampleHi);
    double fx = run_program(f, Value::real(x)).as_real();
    double lhs = fd_partial(gf, Value::real(x), 0, 0);
    double rhs = fd_partial(g, Value::real(fx), 0, 0) * fd_partial(f, Value::real(x), 0, 0);
    CHECK(std::abs(lhs - rhs) <= 1e-4 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("tolerance helpers") {
  CHECK(within_fd_tolerance(1.0, 1.0 + 5e-5));
  CHECK_FALSE(within_fd_tolerance(1.0, 1.0 + 2e-4));
  CHECK(within_fd_tolerance(0.0, 9e-7));
  CHECK(relative_gap(2.0, 2.0) == 0.0);
  CHECK(relative_gap(1.0, 2.0) == 0.5);
  CHECK(relative_gap(0.0, 0.0) == 0.0);
}

TEST_CASE("jacobians of small programs") {
  auto bil = prog("bil", "fun ((x, y) : (real, real)) => x * y", "(real, real) -> real");
  auto in = parse_value("(1.0, 2.0)", ty("(real, real)"));
  for (auto j : {fwd_jacobian(bil, in), fwd_jacobian(bil, in, FwdStrategy::Columns), rev_jacobian(bil, in)}) {
    REQUIRE(j.rows == 1);
    REQUIRE(j.cols == 2);
    CHECK(j.at(0, 0) == 2.0);
    CHECK(j.at(0, 1) == 1.0);
    CHECK(j.col_labels == std::vector<std::string>{"$.0", "$.1"});
    CHECK(j.row_labels == std::vector<std::string>{"$"});
  }
  auto fd = fd_jacobian(bil, in);
  CHECK(within_fd_tolerance(2.0, fd.at(0, 0)));
  CHECK(within_fd_tolerance(1.0, fd.at(0, 1)));

  auto id = prog("id", "fun (p : (real, real, real)) => p", "(real, real, real) -> (real, real, real)");
  auto j = rev_jacobian(id, parse_value("(0.5, -1.0, 2.0)", ty("(real, real, real)")));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(j.at(r, c) == (r == c ? 1.0 : 0.0));
  }

  auto single = prog("single", "fun (x : real) => (x * x, sin(x), 3.0)", "real -> (real, real, real)");
  auto sj = rev_jacobian(single, Value::real(0.5));
  CHECK(sj.rows == 3);
  CHECK(sj.cols == 1);
  CHECK(sj.at(0, 0) == 1.0);
  CHECK(sj.at(1, 0) == doctest::Approx(std::cos(0.5)).epsilon(1e-15));
  CHECK(sj.at(2, 0) == 0.0);
}

TEST_CASE("worked example gradient") {
  auto p = corpus_program("worked", "worked");
  auto in = parse_value("(1.0, 2.0)", p.domain());
  auto g = gradient(p, in, 2, true);
  double s = 1.0 / (1.0 + std::exp(-1.0));
  CHECK(g.value.as_real() == doctest::Approx(2.0 + s).epsilon(1e-15));
  CHECK(g.jacobian.at(0, 0) == doctest::Approx(2.0 + s * (1.0 - s)).epsilon(1e-12));
  CHECK(g.jacobian.at(0, 0) == doctest::Approx(2.19661193).epsilon(1e-8));
  CHECK(g.jacobian.at(0, 1) == 1.0);
  auto fd = fd_jacobian(p, in);
  CHECK(within_fd_tolerance(g.jacobian.at(0, 0), fd.at(0, 0)));
  CHECK(within_fd_tolerance(g.jacobian.at(0, 1), fd.at(0, 1)));

  auto small_k = gradient(p, in, 1, true);
  CHECK(small_k.jacobian.entries == g.jacobian.entries);
  auto fwd = gradient(p, in, 2, false);
  CHECK(relative_gap(fwd.jacobian.at(0, 0), g.jacobian.at(0, 0)) <= kAgreementRtol);
}

TEST_CASE("neuron jacobian matches an analytic oracle") {
  auto p = corpus_program("neuron", "neuron2");
  auto in = parse_value("((1.0, 2.0), ((0.5, -0.25), 0.1))", p.domain());
  double x1 = 1.0, x2 = 2.0, w1 = 0.5, w2 = -0.25, b = 0.1;
  double sp = analytic_sigmoid_prime(w1 * x1 + w2 * x2 + b);
  std::vector<double> want = {sp * w1, sp * w2, sp * x1, sp * x2, sp};
  auto j = fwd_jacobian(p, in);
  auto fd = fd_jacobian(p, in);
  REQUIRE(j.cols == 5);
  for (std::size_t c = 0; c < 5; ++c) {
    CHECK(j.at(0, c) == doctest::Approx(want[c]).epsilon(1e-12));
    CHECK(within_fd_tolerance(j.at(0, c), fd.at(0, c)));
  }
}

TEST_CASE("property checks pass on corpus programs") {
  for (const auto& [stem, entry] : std::vector<std::pair<std::string, std::string>>{
           {"network", "network"}, {"maybe_net", "missing_net"}, {"list_net", "over_list"}, {"vector_out", "polar"}}) {
    auto p = corpus_program(stem, entry);
    CAPTURE(p.name);
    auto dual = check_dual_invariant(p, 20, 1);
    CHECK_MESSAGE(dual.passed, dual.detail);
    CHECK(dual.trials == 20);
    auto agree = check_fwd_rev_agreement(p, 3, 1);
    CHECK_MESSAGE(agree.passed, agree.detail);
    CHECK(check_fwd_strategies(p, 3, 1).passed);
    CHECK(check_gradient_fd(p, 3, 1).passed);
  }
}

TEST_CASE("dual invariant report fields") {
  auto p = prog("square", "fun (x : real) => x * x", "real -> real");
  auto r = check_dual_invariant(p, 10, 3);
  CHECK(r.passed);
  CHECK(r.max_abs_dev < 1e-6);
  CHECK(r.seed == 3);
}

TEST_CASE("roundtrip check") {
  for (const char* src : {"real", "(real, real)", "<Nothing: () | Just: real>", "list real", "(list real, real)"}) {
    for (std::size_t k : {1, 3}) {
      auto r = check_roundtrip(ty(src), k, 50, 9);
      CHECK_MESSAGE(r.passed, src);
      CHECK(r.trials == 50);
      CHECK(r.max_abs_dev == 0.0);
    }
  }
}

TEST_CASE("functoriality check on small triples") {
  Context y{{"y", Type::real()}};
  std::vector<SubstTriple> triples = {
      {y, "x", Type::real(), tm("x + x", y.extended("x", Type::real())), tm("y * y", y)},
      {y, "x", Type::real(), tm("fun (y2 : real) => x * y2", y.extended("x", Type::real())), tm("sigmoid(y)", y)},
  };
  for (auto kind : {MacroKind::Forward, MacroKind::Reverse}) {
    for (std::size_t k : {1, 2}) {
      auto r = check_functoriality("small", triples, kind, k);
      CHECK_MESSAGE(r.passed, r.detail);
      CHECK(r.trials == 2);
    }
  }
}

TEST_CASE("macro typing check on corpus") {
  auto unit = test::corpus_unit("network");
  const auto& d = test::corpus_def(unit, "network");
  auto r = check_macro_typing("network", {}, d.body, d.type, {1, 2, 3});
  CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("normalize contracts simple redexes") {
  CHECK(alpha_eq(normalize(tm("(fun (x : real) => x * x) 2.0")), tm("2.0 * 2.0")));
  CHECK(alpha_eq(normalize(tm("match (1.0, 2.0) with (a, b) => b + a")), tm("2.0 + 1.0")));
  Context p{{"p", ty("(real, real)")}};
  CHECK(alpha_eq(normalize(tm("match (match p with (a, b) => (b, a)) with (c, d) => c", p)),
                 tm("match p with (a, b) => b", p)));
}

TEST_CASE("seeds are derived per check name") {
  CHECK(derive_seed(42, "a") == derive_seed(42, "a"));
  CHECK(derive_seed(42, "a") != derive_seed(42, "b"));
  CHECK(derive_seed(42, "a") != derive_seed(43, "a"));
  Rng a(derive_seed(1, "x")), b(derive_seed(1, "x"));
  for (int i = 0; i < 10; ++i) CHECK(a.uniform(-2, 2) == b.uniform(-2, 2));
}

TEST_CASE("random values respect the sampling ranges") {
  Rng rng(derive_seed(59, "ranges"));
  for (int i = 0; i < 200; ++i) {
    auto l = random_value(ty("list real"), rng);
    CHECK(l.items().size() <= kMaxListLength);
    for (double x : reals_of(l)) CHECK((x >= kSampleLo && x <= kSampleHi));
  }
}

TEST_CASE("suite on an empty directory") {
  TempDir dir("adl_empty_suite");
  auto reports = run_suite(dir.path, 42);
  CHECK(reports.empty());
  CHECK(all_passed(reports));
  CHECK(format_report_json(reports) == "[]\n");
  CHECK_THROWS_AS(run_suite(dir.path / "missing", 42), std::runtime_error);
}

TEST_CASE("suite reports a corrupted file") {
  TempDir dir("adl_bad_suite");
  dir.write("bad.adl", "fun (x : real) => \n");
  dir.write("good.adl", "def sq : real -> real = fun (x : real) => x * x;\nsq 2.0\n");
  auto reports = run_suite(dir.path, 42);
  REQUIRE_FALSE(reports.empty());
  CHECK(reports[0].name == "bad/load");
  CHECK_FALSE(reports[0].passed);
  CHECK(reports[0].detail.find("parse error") != std::string::npos);
  CHECK_FALSE(all_passed(reports));
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed;
  CHECK(passed == reports.size() - 1);
}

TEST_CASE("suite manifests") {
  TempDir dir("adl_manifest_suite");
  dir.write("m.adl", "def sq : real -> real = fun (x : real) => x * x;\nsq 2.0\n");
  dir.write("m.checks.json",
            R"json({"skip": ["sq/gradient-fd"], "dual_trials": 7, "roundtrip": ["(real, list real)"],
                "functoriality": [{"context": {"y": "real"}, "var": "x", "var_type": "real",
                                   "t": "x * y", "u": "y + 1.0"}]})json");
  auto file = load_corpus_file(dir.path / "m.adl");
  REQUIRE(file.error.empty());
  CHECK(file.dual_trials == 7);
  CHECK(file.skip.count("sq/gradient-fd"));
  CHECK(file.roundtrip_types.size() == 1);
  CHECK(file.triples.size() == 1);
  auto reports = run_file_checks(file, 42);
  bool saw_dual = false;
  for (const auto& r : reports) {
    CHECK(r.name != "m/sq/gradient-fd");
    if (r.name == "m/sq/dual-invariant") {
      saw_dual = true;
      CHECK(r.trials == 7);
    }
  }
  CHECK(saw_dual);
  CHECK(all_passed(reports));
}

TEST_CASE("json report shape and determinism") {
  TempDir dir("adl_json_suite");
  dir.write("w.adl", test::read_file(test::corpus_path("worked")));
  auto a = format_report_json(run_suite(dir.path, 42));
  auto b = format_report_json(run_suite(dir.path, 42));
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  REQUIRE(j.is_array());
  REQUIRE_FALSE(j.empty());
  for (const auto& e : j) {
    for (const char* key : {"name", "status", "max_abs_dev", "max_rel_dev", "trials", "seed"}) CHECK(e.contains(key));
    CHECK(e["status"] == "pass");
  }
}
