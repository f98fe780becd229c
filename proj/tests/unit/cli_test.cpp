#include <filesystem>
#include <fstream>
#include <sstream>

#include "adl/cli/commands.hpp"
#include "adl/eval/eval.hpp"
#include "adl/eval/literal.hpp"
#include "adl/harness/suite.hpp"
#include "adl/types/typecheck.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace adl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(cli::CliConfig cfg) {
  std::ostringstream out, err;
  int status = cli::run(cfg, out, err);
  return {status, out.str(), err.str()};
}

cli::CliConfig config(const std::string& command, const std::string& path) {
  cli::CliConfig cfg;
  cfg.command = command;
  cfg.path = path;
  return cfg;
}

fs::path scratch_file(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("typecheck statuses") {
  auto ok = run_cli(config("typecheck", test::corpus_path("neuron")));
  CHECK(ok.status == cli::kOk);
  CHECK(ok.out.find("neuron2 : ((real, real), ((real, real), real)) -> real") != std::string::npos);

  auto bad = run_cli(config("typecheck", scratch_file("adl_cli_bad.adl", "1.0 2.0\n").string()));
  CHECK(bad.status == cli::kTypeError);
  CHECK(bad.err.find("non-arrow applied") != std::string::npos);

  CHECK(run_cli(config("typecheck", "/nonexistent/file.adl")).status == cli::kFailure);

  auto perr = run_cli(config("typecheck", scratch_file("adl_cli_perr.adl", "fun (x : real) =>").string()));
  CHECK(perr.status == cli::kParseError);
  CHECK(perr.err.find(":1:") != std::string::npos);
}

TEST_CASE("eval") {
  auto cfg = config("eval", test::corpus_path("logistic"));
  cfg.entry = "logistic";
  cfg.input = "0.0";
  auto r = run_cli(cfg);
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "0.5\n");

  auto sum = run_cli(config("eval", test::corpus_path("list_sum")));
  CHECK(sum.status == cli::kOk);
  CHECK(sum.out == "6.0\n");

  cfg.input = "(0.0, 1.0)";
  CHECK(run_cli(cfg).status == cli::kBadInput);
  cfg.input = "zz";
  CHECK(run_cli(cfg).status == cli::kBadInput);
  cfg.entry = "missing";
  CHECK(run_cli(cfg).status == cli::kFailure);
}

TEST_CASE("eval is a thin wrapper over the library") {
  auto unit = test::corpus_unit("neuron");
  auto cfg = config("eval", test::corpus_path("neuron"));
  auto r = run_cli(cfg);
  REQUIRE(r.status == cli::kOk);
  CHECK(r.out == format_value(eval(*unit.main), Type::real()) + "\n");
}

TEST_CASE("derive output re-parses and typechecks") {
  for (const char* mode : {"fwd", "rev"}) {
    auto cfg = config("derive", test::corpus_path("neuron"));
    cfg.mode = mode;
    cfg.k = "2";
    auto r = run_cli(cfg);
    REQUIRE(r.status == cli::kOk);
    auto unit = parse(r.out);
    CHECK_NOTHROW(check_unit(unit));
    CHECK(run_cli(cfg).out == r.out);
  }
  auto cfg = config("derive", test::corpus_path("worked"));
  cfg.mode = "rev";
  cfg.k = "2";
  cfg.wrapped = true;
  auto r = run_cli(cfg);
  REQUIRE(r.status == cli::kOk);
  CHECK_NOTHROW(check_unit(parse(r.out)));
}

TEST_CASE("derive usage errors") {
  auto cfg = config("derive", test::corpus_path("neuron"));
  CHECK(run_cli(cfg).status == cli::kFailure);
  cfg.mode = "sideways";
  CHECK(run_cli(cfg).status == cli::kFailure);
  cfg.mode = "fwd";
  cfg.k = "auto";
  CHECK(run_cli(cfg).status == cli::kFailure);
  cfg.k = "0";
  CHECK(run_cli(cfg).status == cli::kFailure);
  cfg.k = "1";
  cfg.wrapped = true;
  CHECK(run_cli(cfg).status == cli::kFailure);

  auto ho = config("derive", test::corpus_path("higher_order"));
  ho.mode = "rev";
  ho.wrapped = true;
  CHECK(run_cli(ho).status == cli::kHigherOrder);
}

TEST_CASE("grad") {
  auto cfg = config("grad", test::corpus_path("worked"));
  cfg.entry = "worked";
  cfg.input = "(1.0, 2.0)";
  cfg.format = "json";
  auto r = run_cli(cfg);
  REQUIRE(r.status == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<std::string>() == "2.731058578630005");
  CHECK(j["jacobian"][0][0].get<double>() == doctest::Approx(2.1966119332414817).epsilon(1e-14));
  CHECK(j["jacobian"][0][1].get<double>() == 1.0);

  cfg.format = "text";
  cfg.mode = "fwd";
  auto t = run_cli(cfg);
  CHECK(t.status == cli::kOk);
  CHECK(t.out.find("2.731058578630005") != std::string::npos);

  auto ho = config("grad", test::corpus_path("higher_order"));
  ho.entry = "twice";
  ho.input = "1.0";
  CHECK(run_cli(ho).status == cli::kHigherOrder);
}

TEST_CASE("grad of constant and identity programs") {
  auto path = scratch_file("adl_cli_small.adl",
                           "def c : (real, real) -> real = fun (p : (real, real)) => 3.0;\n"
                           "def id : (real, real) -> (real, real) = fun (p : (real, real)) => p;\n");
  auto cfg = config("grad", path.string());
  cfg.entry = "c";
  cfg.input = "(1.0, 2.0)";
  cfg.format = "json";
  auto c = nlohmann::json::parse(run_cli(cfg).out);
  CHECK(c["jacobian"] == nlohmann::json::parse("[[0.0, 0.0]]"));
  cfg.entry = "id";
  cfg.k = "1";
  auto id = nlohmann::json::parse(run_cli(cfg).out);
  CHECK(id["jacobian"] == nlohmann::json::parse("[[1.0, 0.0], [0.0, 1.0]]"));
}

TEST_CASE("check") {
  auto empty = fs::temp_directory_path() / "adl_cli_empty";
  fs::remove_all(empty);
  fs::create_directories(empty);
  auto cfg = config("check", empty.string());
  cfg.format = "json";
  auto r = run_cli(cfg);
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "[]\n");
  fs::remove_all(empty);

  CHECK(run_cli(config("check", "/nonexistent/dir")).status == cli::kFailure);

  auto bad = fs::temp_directory_path() / "adl_cli_badcorpus";
  fs::remove_all(bad);
  fs::create_directories(bad);
  std::ofstream(bad / "x.adl") << "(1.0";
  CHECK(run_cli(config("check", bad.string())).status == cli::kFailure);
  fs::remove_all(bad);
}

TEST_CASE("unknown command") { CHECK(run_cli(config("frobnicate", "x")).status == cli::kFailure); }
