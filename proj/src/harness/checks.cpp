#include "adl/harness/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "adl/ad/forward.hpp"
#include "adl/ad/reverse.hpp"
#include "adl/core/fresh.hpp"
#include "adl/core/pretty.hpp"
#include "adl/core/subst.hpp"
#include "adl/eval/eval.hpp"
#include "adl/harness/random.hpp"
#include "adl/types/typecheck.hpp"

namespace adl {

bool within_fd_tolerance(double ad, double fd) { return std::abs(ad - fd) <= kAtol + kRtol * std::abs(ad); }

double relative_gap(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

void CheckReport::record(double abs_dev, double rel_dev) {
  if (std::isnan(abs_dev) || abs_dev > max_abs_dev) max_abs_dev = abs_dev;
  if (std::isnan(rel_dev) || rel_dev > max_rel_dev) max_rel_dev = rel_dev;
}

void CheckReport::fail(const std::string& why) {
  if (passed) detail = why;
  passed = false;
}

namespace {

std::string fmt(double x) { return format_real(x); }

CheckReport start(const std::string& name, std::uint64_t seed) {
  CheckReport r;
  r.name = name;
  r.seed = seed;
  return r;
}

template <class Body>
void guarded(CheckReport& r, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
}

}  // namespace

CheckReport check_macro_typing(const std::string& name, const Context& ctx, const Term& t, const Type& type,
                               const std::vector<std::size_t>& ks) {
  auto r = start(name, 0);
  for (auto k : ks) {
    for (auto kind : {MacroKind::Forward, MacroKind::Reverse}) {
      ++r.trials;
      try {
        if (kind == MacroKind::Forward) {
          check(derive_ctx_fwd(ctx, k), derive_term_fwd(t, k), derive_type_fwd(type, k));
        } else {
          check(derive_ctx_rev(ctx, k), derive_term_rev(t, k), derive_type_rev(type, k));
        }
      } catch (const std::exception& e) {
        r.fail(std::string(kind == MacroKind::Forward ? "forward" : "reverse") + " k=" + std::to_string(k) + ": " +
               e.what());
      }
    }
  }
  return r;
}

CheckReport check_dual_invariant(const Program& p, std::size_t trials, std::uint64_t seed) {
  auto r = start(p.name, seed);
  guarded(r, [&] {
    Rng rng(seed);
    auto fn = eval(p.fn);
    auto dual = eval(derive_term_fwd(p.fn, 1));
    for (std::size_t trial = 0; trial < trials; ++trial) {
      ++r.trials;
      auto shape = random_value(p.domain(), rng);
      auto base = reals_of(shape);
      const auto n = base.size();
      std::vector<double> a(n), b(n);
      double s0 = rng.uniform(kSampleLo, kSampleHi);
      for (std::size_t i = 0; i < n; ++i) {
        b[i] = trial == 0 ? 0.0 : rng.uniform(kSampleLo, kSampleHi);
        a[i] = base[i] - b[i] * s0;
      }
      auto curve = [&](double s) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = a[i] + b[i] * s;
        return with_reals(shape, x);
      };
      auto x0 = curve(s0);
      std::vector<std::vector<double>> tangents;
      for (double bi : b) tangents.push_back({bi});
      auto out = split_tangents(apply(dual, with_tangents(x0, 1, tangents)), p.codomain(), 1);
      auto primal = apply(fn, x0);
      if (!(out.primal == primal)) {
        r.fail("trial " + std::to_string(trial) + ": primal output of the derivative differs from the program");
      }
      auto fp = reals_of(apply(fn, curve(s0 + kFdStep)));
      auto fm = reals_of(apply(fn, curve(s0 - kFdStep)));
      for (std::size_t i = 0; i < out.tangents.size(); ++i) {
        double ad = out.tangents[i][0];
        double fd = (fp[i] - fm[i]) / (2.0 * kFdStep);
        double dev = std::abs(ad - fd);
        r.record(dev, relative_gap(ad, fd));
        if (trial == 0 && ad != 0.0) {
          r.fail("zero directions gave a nonzero tangent " + fmt(ad) + " at output slot " + std::to_string(i));
        } else if (!within_fd_tolerance(ad, fd)) {
          r.fail("trial " + std::to_string(trial) + ", output slot " + std::to_string(i) + ": tangent " + fmt(ad) +
                 " vs finite difference " + fmt(fd));
        }
      }
    }
  });
  return r;
}

CheckReport check_roundtrip(const Type& t, std::size_t k, std::size_t trials, std::uint64_t seed) {
  auto r = start("roundtrip " + t.str() + " k=" + std::to_string(k), seed);
  guarded(r, [&] {
    Rng rng(seed);
    auto z = fresh::name("z");
    auto dt = derive_type_fwd(t, k);
    auto term = lam(z, dt, unwrap_term(t, k, wrap_term(t, k, var(z))));
    check(Context{}, term, Type::arrow(dt, dt));
    auto fn = eval(term);
    for (std::size_t i = 0; i < trials; ++i) {
      ++r.trials;
      auto v = random_value(t, rng);
      auto dv = with_tangents(v, k, random_tangents(real_slots(v).size(), k, rng));
      auto back = apply(fn, dv);
      if (!(back == dv)) r.fail("trial " + std::to_string(i) + ": value changed by wrap then unwrap");
    }
  });
  return r;
}

CheckReport check_fwd_rev_agreement(const Program& p, std::size_t points, std::uint64_t seed) {
  auto r = start(p.name, seed);
  guarded(r, [&] {
    Rng rng(seed);
    for (std::size_t i = 0; i < points; ++i) {
      ++r.trials;
      auto input = random_value(p.domain(), rng);
      auto fwd = fwd_jacobian(p, input);
      auto rev = rev_jacobian(p, input);
      if (fwd.rows != rev.rows || fwd.cols != rev.cols) {
        r.fail("Jacobian shapes differ");
        continue;
      }
      for (std::size_t e = 0; e < fwd.entries.size(); ++e) {
        double gap = relative_gap(rev.entries[e], fwd.entries[e]);
        r.record(std::abs(rev.entries[e] - fwd.entries[e]), gap);
        if (!(gap <= kAgreementRtol)) {
          r.fail("point " + std::to_string(i) + ", entry (" + fwd.row_labels[e / fwd.cols] + ", " +
                 fwd.col_labels[e % fwd.cols] + "): reverse " + fmt(rev.entries[e]) + " vs forward " +
                 fmt(fwd.entries[e]));
        }
      }
    }
  });
  return r;
}

CheckReport check_fwd_strategies(const Program& p, std::size_t points, std::uint64_t seed) {
  auto r = start(p.name, seed);
  guarded(r, [&] {
    Rng rng(seed);
    for (std::size_t i = 0; i < points; ++i) {
      ++r.trials;
      auto input = random_value(p.domain(), rng);
      auto cols = fwd_jacobian(p, input, FwdStrategy::Columns);
      auto once = fwd_jacobian(p, input, FwdStrategy::SinglePass);
      for (std::size_t e = 0; e < cols.entries.size(); ++e) {
        r.record(std::abs(cols.entries[e] - once.entries[e]), relative_gap(cols.entries[e], once.entries[e]));
        if (std::bit_cast<std::uint64_t>(cols.entries[e]) != std::bit_cast<std::uint64_t>(once.entries[e])) {
          r.fail("point " + std::to_string(i) + ": column-wise " + fmt(cols.entries[e]) + " vs single pass " +
                 fmt(once.entries[e]));
        }
      }
    }
  });
  return r;
}

CheckReport check_gradient_fd(const Program& p, std::size_t points, std::uint64_t seed) {
  auto r = start(p.name, seed);
  guarded(r, [&] {
    Rng rng(seed);
    for (std::size_t i = 0; i < points; ++i) {
      ++r.trials;
      auto input = random_value(p.domain(), rng);
      auto ad = fwd_jacobian(p, input);
      auto fd = fd_jacobian(p, input);
      for (std::size_t e = 0; e < ad.entries.size(); ++e) {
        r.record(std::abs(ad.entries[e] - fd.entries[e]), relative_gap(ad.entries[e], fd.entries[e]));
        if (!within_fd_tolerance(ad.entries[e], fd.entries[e])) {
          r.fail("point " + std::to_string(i) + ", entry (" + ad.row_labels[e / ad.cols] + ", " +
                 ad.col_labels[e % ad.cols] + "): derivative " + fmt(ad.entries[e]) + " vs finite difference " +
                 fmt(fd.entries[e]));
        }
      }
    }
  });
  return r;
}

CheckReport check_functoriality(const std::string& name, const std::vector<SubstTriple>& triples, MacroKind kind,
                                std::size_t k) {
  auto r = start(name, 0);
  auto derive = [&](const Term& t) { return kind == MacroKind::Forward ? derive_term_fwd(t, k) : derive_term_rev(t, k); };
  for (std::size_t i = 0; i < triples.size(); ++i) {
    ++r.trials;
    const auto& tr = triples[i];
    guarded(r, [&] {
      auto lhs = derive(subst(tr.t, tr.x, tr.u));
      auto rhs = subst(derive(tr.t), tr.x, derive(tr.u));
      if (!alpha_eq(lhs, rhs)) {
        r.fail("triple " + std::to_string(i) + " (" + tr.x + " := " + pretty(tr.u) + "): sides differ");
      }
    });
  }
  return r;
}

}  // namespace adl
