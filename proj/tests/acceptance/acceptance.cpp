#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>

#include "adl/ad/forward.hpp"
#include "adl/ad/reverse.hpp"
#include "adl/eval/eval.hpp"
#include "adl/eval/slots.hpp"
#include "adl/harness/checks.hpp"
#include "adl/harness/generate.hpp"
#include "adl/harness/jacobian.hpp"
#include "adl/harness/random.hpp"
#include "adl/harness/suite.hpp"
#include "adl/syntax/parser.hpp"

using namespace adl;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool passed = true;
  std::string summary;
};

std::vector<CorpusFile> load_corpus() {
  std::vector<CorpusFile> files;
  for (const auto& path : corpus_paths(ADL_CORPUS_DIR)) files.push_back(load_corpus_file(path));
  return files;
}

std::string first_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return r.name + ": " + r.detail;
  }
  return "";
}

Outcome summarize(const std::vector<CheckReport>& reports, const std::string& what) {
  Outcome o;
  double worst_rel = 0.0;
  for (const auto& r : reports) {
    o.passed = o.passed && r.passed;
    worst_rel = std::max(worst_rel, r.max_rel_dev);
  }
  std::ostringstream ss;
  ss << reports.size() << " " << what << ", max rel dev " << worst_rel;
  if (!o.passed) ss << "; first failure " << first_failure(reports);
  o.summary = ss.str();
  return o;
}

Outcome macro_typing(const std::vector<CorpusFile>& corpus) {
  std::vector<CheckReport> reports;
  std::size_t programs = 0;
  std::set<std::string> required = {"neuron/neuron2", "network/network", "inner_product/dot2", "list_net/over_list",
                                    "maybe_net/missing_net"};
  for (const auto& f : corpus) {
    if (!f.error.empty()) return {false, f.stem + " failed to load: " + f.error};
    for (const auto& e : f.entries) {
      programs += e.is_program();
      if (e.is_program()) required.erase(f.stem + "/" + e.name);
      reports.push_back(check_macro_typing(f.stem + "/" + e.name, {}, e.term, e.type, {1, 2, 3}));
    }
  }
  auto o = summarize(reports, "entries (k = 1, 2, 3, both macros)");
  o.summary += ", " + std::to_string(programs) + " first-order programs";
  if (programs < 12) {
    o.passed = false;
    o.summary += " (need at least 12)";
  }
  for (const auto& name : required) {
    o.passed = false;
    o.summary += ", missing " + name;
  }
  return o;
}

Outcome functoriality(const std::vector<CorpusFile>& corpus) {
  std::vector<SubstTriple> triples;
  for (const auto& f : corpus) {
    auto ts = substitution_triples(f, derive_seed(kSeed, f.stem + "/triples"));
    triples.insert(triples.end(), ts.begin(), ts.end());
  }
  std::vector<CheckReport> reports;
  for (auto kind : {MacroKind::Forward, MacroKind::Reverse}) {
    for (std::size_t k : {1, 2, 3}) reports.push_back(check_functoriality("corpus", triples, kind, k));
  }
  auto o = summarize(reports, "macro/k combinations");
  o.summary += ", " + std::to_string(triples.size()) + " triples each";
  if (triples.size() < 20) {
    o.passed = false;
    o.summary += " (need at least 20)";
  }
  return o;
}

Outcome dual_invariant(const std::vector<CorpusFile>& corpus) {
  std::vector<CheckReport> reports;
  for (const auto& f : corpus) {
    for (const auto& e : f.entries) {
      if (!e.is_program()) continue;
      auto p = e.program(f.stem);
      reports.push_back(check_dual_invariant(p, kDualTrials, derive_seed(kSeed, p.name + "/dual")));
    }
  }
  return summarize(reports, "programs x 50 affine-curve trials");
}

Outcome worked_identity() {
  Outcome o;
  std::ostringstream ss;
  ss << std::setprecision(17);
  const Context gamma{{"x", Type::real()}, {"y", Type::real()}};
  const std::array<std::pair<const char*, const char*>, 2> cases = {{
      {"x*y", "x * y"},
      {"x*y+sigmoid(x)", "x * y + sigmoid(x)"},
  }};
  for (const auto& [label, src] : cases) {
    auto t = parse_term(src, gamma);
    auto g = grad_program(t, gamma, Type::real(), 2);
    auto point = Value::tuple({Value::real(1.0), Value::real(2.0)});
    auto out = apply(eval(g), with_tangents(point, 2, one_hot(2)));
    double value = out.items()[0].as_real();
    std::array<double, 2> grad = {out.items()[1].items()[0].as_real(), out.items()[1].items()[1].as_real()};

    Program p{label, lam("p", gamma.as_product(), match_tuple(var("p"), {"x", "y"}, t)),
              Type::arrow(gamma.as_product(), Type::real())};
    double direct = run_program(p, point).as_real();
    auto fwd = fwd_jacobian(p, point);
    bool ok = value == direct;
    for (std::size_t j = 0; j < 2; ++j) {
      double fd = fd_partial(p, point, 0, j);
      ok = ok && within_fd_tolerance(grad[j], fd) && relative_gap(grad[j], fwd.at(0, j)) <= kAgreementRtol;
    }
    o.passed = o.passed && ok;
    if (ss.tellp() > 0) ss << "; ";
    ss << label << " -> (" << value << ", " << grad[0] << ", " << grad[1] << ")" << (ok ? "" : " MISMATCH");
  }
  o.summary = ss.str();
  return o;
}

Outcome roundtrip() {
  std::vector<CheckReport> reports;
  for (const char* src : {"real", "(real, real)", "<Nothing: () | Just: real>", "list real", "(list real, real)"}) {
    for (std::size_t k : {1, 3}) {
      std::string name = std::string("roundtrip ") + src + " k" + std::to_string(k);
      reports.push_back(check_roundtrip(parse_type(src), k, kRoundtripTrials, derive_seed(kSeed, name)));
    }
  }
  return summarize(reports, "type/k combinations x 100 values");
}

Outcome fwd_rev_agreement(const std::vector<CorpusFile>& corpus) {
  std::vector<CheckReport> reports;
  for (const auto& f : corpus) {
    for (const auto& e : f.entries) {
      if (!e.is_program()) continue;
      auto p = e.program(f.stem);
      reports.push_back(check_fwd_rev_agreement(p, kAgreementPoints, derive_seed(kSeed, p.name + "/agree")));
    }
  }
  return summarize(reports, "programs x 10 points");
}

Outcome beta_laws() {
  Outcome o;
  std::ostringstream ss;
  for (auto rule : kBetaRules) {
    Rng rng(derive_seed(kSeed, std::string("beta/") + std::string(beta_rule_name(rule))));
    std::size_t agree = 0;
    for (int i = 0; i < 100; ++i) {
      auto inst = beta_instance(rule, rng);
      agree += eval(inst.redex) == eval(inst.contractum);
    }
    o.passed = o.passed && agree == 100;
    if (ss.tellp() > 0) ss << "; ";
    ss << beta_rule_name(rule) << " " << agree << "/100";
  }
  o.summary = ss.str();
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  if (status != 0) out += "\n<exit status " + std::to_string(status) + ">";
  return out;
}

Outcome determinism() {
  std::string cmd = std::string("\"") + ADCALC_PATH + "\" check \"" + ADL_CORPUS_DIR + "\" --seed 42 --format json";
  auto a = capture(cmd);
  auto b = capture(cmd);
  Outcome o;
  o.passed = !a.empty() && a == b && a.find("<exit status") == std::string::npos;
  o.summary = std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different");
  return o;
}

}  // namespace

int main() {
  auto corpus = load_corpus();
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "macro typing", 5.0, [&] { return macro_typing(corpus); }},
      {2, "substitution functoriality", 1.0, [&] { return functoriality(corpus); }},
      {3, "dual-number invariant", 30.0, [&] { return dual_invariant(corpus); }},
      {4, "worked gradient identity", 1.0, [] { return worked_identity(); }},
      {5, "wrap/unwrap round trip", 5.0, [] { return roundtrip(); }},
      {6, "forward/reverse agreement", 30.0, [&] { return fwd_rev_agreement(corpus); }},
      {7, "beta-law soundness", 5.0, [] { return beta_laws(); }},
      {8, "determinism", 60.0, [] { return determinism(); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs <= c.budget_s;
    bool ok = o.passed && in_budget;
    all = all && ok;
    std::printf("%s %d %s: %s [%.3fs, budget %.0fs%s]\n", ok ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str(), secs,
                c.budget_s, in_budget ? "" : ", over budget");
  }
  return all ? 0 : 1;
}
