#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adl/core/context.hpp"
#include "adl/core/term.hpp"
#include "adl/core/type.hpp"
#include "adl/harness/jacobian.hpp"

namespace adl {

inline constexpr double kAtol = 1e-6;
inline constexpr double kRtol = 1e-4;
inline constexpr double kAgreementRtol = 1e-9;

/// |ad - fd| <= kAtol + kRtol * |ad|
bool within_fd_tolerance(double ad, double fd);

/// Relative difference |a - b| / max(|a|, |b|), 0 when a == b.
double relative_gap(double a, double b);

struct CheckReport {
  std::string name;
  bool passed = true;
  double max_abs_dev = 0.0;
  double max_rel_dev = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string detail;  // first failure, if any

  void record(double abs_dev, double rel_dev);
  void fail(const std::string& why);
};

/// Both macros' images typecheck at the image types, for each k given.
CheckReport check_macro_typing(const std::string& name, const Context& ctx, const Term& t, const Type& type,
                               const std::vector<std::size_t>& ks);

/// Evaluates D(program) along random affine curves a + b s at random s0 and
/// compares tangents with central differences of s -> program(a + b s).
/// The first trial uses zero directions and expects zero tangents exactly.
CheckReport check_dual_invariant(const Program& p, std::size_t trials, std::uint64_t seed);

/// unwrap(wrap(v)) == v bit-for-bit for random v : D^k(t).
CheckReport check_roundtrip(const Type& t, std::size_t k, std::size_t trials, std::uint64_t seed);

/// Reverse and forward Jacobians agree entrywise within kAgreementRtol.
CheckReport check_fwd_rev_agreement(const Program& p, std::size_t points, std::uint64_t seed);

/// Forward Jacobians by columns and in one pass are bit-identical.
CheckReport check_fwd_strategies(const Program& p, std::size_t points, std::uint64_t seed);

/// Forward Jacobian agrees with central differences.
CheckReport check_gradient_fd(const Program& p, std::size_t points, std::uint64_t seed);

enum class MacroKind { Forward, Reverse };

struct SubstTriple {
  Context ctx;  // types the free variables of t (other than x) and of u
  std::string x;
  Type x_type;
  Term t;
  Term u;
};

/// D(t[u/x]) is alpha-equal to D(t)[D(u)/x] for every triple.
CheckReport check_functoriality(const std::string& name, const std::vector<SubstTriple>& triples, MacroKind kind,
                                std::size_t k);

}  // namespace adl
