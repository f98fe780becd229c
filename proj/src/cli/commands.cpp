#include "adl/cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "adl/ad/forward.hpp"
#include "adl/ad/reverse.hpp"
#include "adl/core/fresh.hpp"
#include "adl/core/ops.hpp"
#include "adl/core/pretty.hpp"
#include "adl/eval/eval.hpp"
#include "adl/eval/literal.hpp"
#include "adl/harness/jacobian.hpp"
#include "adl/harness/suite.hpp"
#include "adl/syntax/parser.hpp"
#include "adl/types/typecheck.hpp"

namespace adl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  SourceUnit unit;
  TypedUnit types;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.unit = parse(read_source(path));
  l.types = check_unit(l.unit);
  return l;
}

struct Target {
  std::string name;
  Term term;
  Type type;
};

Target select(const Loaded& l, const CliConfig& cfg) {
  if (cfg.entry) {
    for (std::size_t i = 0; i < l.unit.defs.size(); ++i) {
      if (l.unit.defs[i].name == *cfg.entry) return {l.unit.defs[i].name, l.unit.defs[i].body, l.unit.defs[i].type};
    }
    throw UsageError("no definition named '" + *cfg.entry + "'");
  }
  if (l.unit.main) return {"main", *l.unit.main, *l.types.main_type};
  if (!l.unit.defs.empty()) {
    const auto& d = l.unit.defs.back();
    return {d.name, d.body, d.type};
  }
  throw UsageError("file has no definitions and no main term");
}

std::size_t parse_k(const std::string& text) {
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || ptr != text.data() + text.size() || k == 0) {
    throw UsageError("--k must be a positive integer or 'auto', got '" + text + "'");
  }
  return k;
}

void require_format(const CliConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be 'text' or 'json'");
}

// Maps library exceptions onto the exit-status contract.
int guarded(const CliConfig& cfg, std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << cfg.path << ":" << e.line() << ":" << e.column() << ": parse error: " << e.message() << "\n";
    return kParseError;
  } catch (const TypeError& e) {
    err << cfg.path << ": type error at " << e.path_str() << ": " << e.what() << "\n";
    return kTypeError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const HigherOrderType& e) {
    err << "error: " << e.what() << "\n";
    return kHigherOrder;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int cmd_typecheck(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    auto l = load(cfg.path);
    for (std::size_t i = 0; i < l.unit.defs.size(); ++i) out << l.unit.defs[i].name << " : " << l.types.def_types[i] << "\n";
    if (l.types.main_type) out << "main : " << *l.types.main_type << "\n";
    return kOk;
  });
}

int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    auto l = load(cfg.path);
    auto target = select(l, cfg);
    if (!cfg.input) {
      out << format_value(eval(target.term), target.type) << "\n";
      return kOk;
    }
    if (!target.type.is_arrow()) throw UsageError("'" + target.name + "' is not a function; drop --input");
    auto arg = parse_value(*cfg.input, target.type.domain());
    out << format_value(apply(eval(target.term), arg), target.type.codomain()) << "\n";
    return kOk;
  });
}

int cmd_derive(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    if (!cfg.mode || (*cfg.mode != "fwd" && *cfg.mode != "rev")) throw UsageError("derive needs --mode fwd or --mode rev");
    bool rev = *cfg.mode == "rev";
    if (cfg.wrapped && !rev) throw UsageError("--wrapped only applies to --mode rev");
    std::size_t k = 1;
    if (cfg.k) {
      if (*cfg.k == "auto") throw UsageError("--k auto is only accepted by grad");
      k = parse_k(*cfg.k);
    }
    auto l = load(cfg.path);

    SourceUnit result;
    auto emit = [&](const std::string& name, const Term& t, const Type& ty) {
      if (cfg.wrapped) {
        Term g = ty.is_arrow() ? grad_function(t, ty, k) : grad_program(t, {}, ty, k);
        Type gt = ty.is_arrow() ? Type::arrow(derive_type_fwd(ty.domain(), k), derive_type_fwd(ty.codomain(), k))
                                : Type::arrow(derive_type_fwd(Type::unit(), k), derive_type_fwd(ty, k));
        check({}, g, gt);
        return Definition{name, gt, g};
      }
      Term d = rev ? derive_term_rev(t, k) : derive_term_fwd(t, k);
      Type dt = rev ? derive_type_rev(ty, k) : derive_type_fwd(ty, k);
      check({}, d, dt);
      return Definition{name, dt, d};
    };

    if (cfg.entry) {
      auto target = select(l, cfg);
      result.defs.push_back(emit(target.name, target.term, target.type));
    } else {
      for (std::size_t i = 0; i < l.unit.defs.size(); ++i) {
        const auto& d = l.unit.defs[i];
        result.defs.push_back(emit(d.name, d.body, d.type));
      }
      if (l.unit.main) {
        auto m = emit("main", *l.unit.main, *l.types.main_type);
        result.main = m.body;
      }
    }
    out << render(result);
    return kOk;
  });
}

int cmd_grad(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    require_format(cfg);
    if (!cfg.input) throw UsageError("grad needs --input <literal>");
    bool rev = !cfg.mode || *cfg.mode == "rev";
    if (cfg.mode && *cfg.mode != "fwd" && *cfg.mode != "rev") throw UsageError("--mode must be fwd or rev");
    auto l = load(cfg.path);
    auto target = select(l, cfg);
    if (!target.type.is_arrow()) throw UsageError("'" + target.name + "' is not a function");
    if (!target.type.domain().first_order()) throw HigherOrderType(target.type.domain());
    if (!target.type.codomain().first_order()) throw HigherOrderType(target.type.codomain());
    auto input = parse_value(*cfg.input, target.type.domain());
    auto slots = real_slots(input).size();
    std::size_t k = (!cfg.k || *cfg.k == "auto") ? std::max<std::size_t>(slots, 1) : parse_k(*cfg.k);

    Program p{target.name, target.term, target.type};
    auto g = gradient(p, input, k, rev);
    const auto& j = g.jacobian;
    auto value = format_value(g.value, target.type.codomain());
    if (cfg.format == "json") {
      nlohmann::json doc = {{"value", value}, {"k", k}, {"mode", rev ? "rev" : "fwd"},
                            {"rows", j.row_labels}, {"cols", j.col_labels}};
      auto rows = nlohmann::json::array();
      for (std::size_t r = 0; r < j.rows; ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < j.cols; ++c) row.push_back(j.at(r, c));
        rows.push_back(std::move(row));
      }
      doc["jacobian"] = std::move(rows);
      out << doc.dump(2) << "\n";
      return kOk;
    }
    out << "value: " << value << "\n";
    out << "jacobian (" << j.rows << " x " << j.cols << ", k=" << k << ", " << (rev ? "reverse" : "forward") << "):\n";
    for (std::size_t r = 0; r < j.rows; ++r) {
      out << "  d" << j.row_labels[r] << ":";
      for (std::size_t c = 0; c < j.cols; ++c) out << "  " << j.col_labels[c] << "=" << format_real(j.at(r, c));
      out << "\n";
    }
    return kOk;
  });
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    require_format(cfg);
    auto reports = run_suite(cfg.path, cfg.seed);
    out << (cfg.format == "json" ? format_report_json(reports) : format_report_text(reports));
    return all_passed(reports) ? kOk : kFailure;
  });
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  fresh::reset();
  if (cfg.command == "typecheck") return cmd_typecheck(cfg, out, err);
  if (cfg.command == "eval") return cmd_eval(cfg, out, err);
  if (cfg.command == "derive") return cmd_derive(cfg, out, err);
  if (cfg.command == "grad") return cmd_grad(cfg, out, err);
  if (cfg.command == "check") return cmd_check(cfg, out, err);
  err << "error: unknown command '" << cfg.command << "'\n";
  return kFailure;
}

}  // namespace adl::cli
