#include "adl/harness/suite.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "adl/core/pretty.hpp"
#include "adl/eval/literal.hpp"
#include "adl/harness/random.hpp"
#include "adl/types/typecheck.hpp"

namespace adl {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void load_manifest(CorpusFile& file, const fs::path& manifest_path) {
  auto doc = json::parse(read_file(manifest_path));
  if (doc.contains("skip")) {
    for (const auto& s : doc.at("skip")) file.skip.insert(s.get<std::string>());
  }
  if (doc.contains("dual_trials")) file.dual_trials = doc.at("dual_trials").get<std::size_t>();
  if (doc.contains("roundtrip")) {
    for (const auto& t : doc.at("roundtrip")) file.roundtrip_types.push_back(parse_type(t.get<std::string>()));
  }
  if (doc.contains("functoriality")) {
    for (const auto& entry : doc.at("functoriality")) {
      SubstTriple tr;
      if (entry.contains("context")) {
        for (const auto& [name, ty] : entry.at("context").items()) tr.ctx.extend(name, parse_type(ty.get<std::string>()));
      }
      tr.x = entry.at("var").get<std::string>();
      tr.x_type = parse_type(entry.at("var_type").get<std::string>());
      tr.t = parse_term(entry.at("t").get<std::string>(), tr.ctx.extended(tr.x, tr.x_type));
      tr.u = parse_term(entry.at("u").get<std::string>(), tr.ctx);
      check(tr.ctx.extended(tr.x, tr.x_type), tr.t, infer(tr.ctx.extended(tr.x, tr.x_type), tr.t));
      check(tr.ctx, tr.u, tr.x_type);
      file.triples.push_back(std::move(tr));
    }
  }
}

CheckReport load_failure(const CorpusFile& file) {
  CheckReport r;
  r.name = file.stem + "/load";
  r.passed = false;
  r.trials = 1;
  r.detail = file.error;
  return r;
}

CheckReport named(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

}  // namespace

std::vector<fs::path> corpus_paths(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw std::runtime_error("not a readable directory: " + dir.string());
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".adl") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CorpusFile load_corpus_file(const fs::path& path) {
  CorpusFile file;
  file.path = path;
  file.stem = path.stem().string();
  try {
    file.unit = parse(read_file(path));
    auto typed = check_unit(*file.unit);
    for (std::size_t i = 0; i < file.unit->defs.size(); ++i) {
      const auto& d = file.unit->defs[i];
      file.entries.push_back({d.name, d.body, d.type});
    }
    if (file.unit->main) file.entries.push_back({"main", *file.unit->main, *typed.main_type});
    auto manifest = path;
    manifest.replace_extension(".checks.json");
    if (fs::exists(manifest)) load_manifest(file, manifest);
  } catch (const ParseError& e) {
    file.error = "parse error at " + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message();
  } catch (const TypeError& e) {
    file.error = std::string("type error at ") + e.path_str() + ": " + e.what();
  } catch (const std::exception& e) {
    file.error = e.what();
  }
  return file;
}

std::vector<SubstTriple> substitution_triples(const CorpusFile& file, std::uint64_t seed) {
  std::vector<SubstTriple> out;
  Rng rng(derive_seed(seed, file.stem + "/substitution"));
  for (const auto& e : file.entries) {
    if (!e.term.is<term::Lam>()) continue;
    const auto& l = e.term.as<term::Lam>();
    if (!l.annot.first_order()) continue;
    out.push_back({Context{}, l.var, l.annot, l.body, value_term(random_value(l.annot, rng), l.annot)});
  }
  out.insert(out.end(), file.triples.begin(), file.triples.end());
  return out;
}

std::vector<CheckReport> run_file_checks(const CorpusFile& file, std::uint64_t seed) {
  std::vector<CheckReport> out;
  if (!file.error.empty()) {
    out.push_back(load_failure(file));
    return out;
  }
  auto want = [&](const std::string& entry, const std::string& check) {
    return !file.skip.count(entry + "/" + check);
  };
  for (const auto& e : file.entries) {
    auto prefix = file.stem + "/" + e.name + "/";
    if (want(e.name, "macro-typing")) {
      out.push_back(named(check_macro_typing(e.name, {}, e.term, e.type, {1, 2, 3}), prefix + "macro-typing"));
    }
    if (!e.is_program()) continue;
    auto p = e.program(file.stem);
    auto run = [&](const std::string& check, auto&& body) {
      if (!want(e.name, check)) return;
      auto name = prefix + check;
      out.push_back(named(body(derive_seed(seed, name)), name));
    };
    run("dual-invariant", [&](std::uint64_t s) { return check_dual_invariant(p, file.dual_trials, s); });
    run("gradient-fd", [&](std::uint64_t s) { return check_gradient_fd(p, 5, s); });
    run("fwd-strategies", [&](std::uint64_t s) { return check_fwd_strategies(p, 3, s); });
    run("fwd-rev-agreement", [&](std::uint64_t s) { return check_fwd_rev_agreement(p, kAgreementPoints, s); });
    for (std::size_t k : {1, 3}) {
      run("roundtrip-domain-k" + std::to_string(k),
          [&](std::uint64_t s) { return check_roundtrip(p.domain(), k, kRoundtripTrials, s); });
      run("roundtrip-codomain-k" + std::to_string(k),
          [&](std::uint64_t s) { return check_roundtrip(p.codomain(), k, kRoundtripTrials, s); });
    }
  }
  for (std::size_t i = 0; i < file.roundtrip_types.size(); ++i) {
    for (std::size_t k : {1, 3}) {
      auto name = file.stem + "/roundtrip[" + file.roundtrip_types[i].str() + "]-k" + std::to_string(k);
      out.push_back(named(check_roundtrip(file.roundtrip_types[i], k, kRoundtripTrials, derive_seed(seed, name)), name));
    }
  }
  auto triples = substitution_triples(file, seed);
  if (!triples.empty()) {
    for (std::size_t k : {1, 2}) {
      auto ks = std::to_string(k);
      out.push_back(check_functoriality(file.stem + "/functoriality-fwd-k" + ks, triples, MacroKind::Forward, k));
      out.push_back(check_functoriality(file.stem + "/functoriality-rev-k" + ks, triples, MacroKind::Reverse, k));
    }
  }
  return out;
}

std::vector<CheckReport> run_suite(const fs::path& dir, std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (const auto& path : corpus_paths(dir)) {
    auto reports = run_file_checks(load_corpus_file(path), seed);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

std::string format_report_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << "  trials=" << r.trials
       << " max_abs_dev=" << format_real(r.max_abs_dev) << " max_rel_dev=" << format_real(r.max_rel_dev)
       << " seed=" << r.seed << "\n";
    if (!r.detail.empty()) os << "     " << r.detail << "\n";
  }
  os << reports.size() << " checks, " << failed << " failed\n";
  return os.str();
}

std::string format_report_json(const std::vector<CheckReport>& reports) {
  json doc = json::array();
  for (const auto& r : reports) {
    json o = {{"name", r.name},
              {"status", r.passed ? "pass" : "fail"},
              {"max_abs_dev", r.max_abs_dev},
              {"max_rel_dev", r.max_rel_dev},
              {"trials", r.trials},
              {"seed", r.seed}};
    if (!r.detail.empty()) o["detail"] = r.detail;
    doc.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

}  // namespace adl
