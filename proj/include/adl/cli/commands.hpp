#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace adl::cli {

enum ExitStatus : int {
  kOk = 0,
  kFailure = 1,  // IO, usage, or failed checks
  kParseError = 2,
  kTypeError = 3,
  kBadInput = 4,
  kHigherOrder = 5,
};

struct CliConfig {
  std::string command;
  std::string path;
  std::optional<std::string> entry;  // definition to use instead of the main term
  std::optional<std::string> mode;   // fwd | rev
  std::optional<std::string> k;      // positive integer or "auto"
  std::optional<std::string> input;  // value literal
  std::uint64_t seed = 42;
  std::optional<std::string> out;
  std::string format = "text";  // text | json
  bool wrapped = false;
};

/// Each command writes its result to `out` and diagnostics to `err`, and
/// returns the process exit status.
int cmd_typecheck(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_derive(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_grad(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command. Resets the fresh-name counter first so output
/// is reproducible.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace adl::cli
