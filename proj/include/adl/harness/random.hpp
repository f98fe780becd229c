#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "adl/core/type.hpp"
#include "adl/eval/value.hpp"

namespace adl {

/// Seed for one named check, so checks draw independent, reproducible streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  /// Uniform in [0, n).
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr double kSampleLo = -2.0;
inline constexpr double kSampleHi = 2.0;
inline constexpr std::size_t kMaxListLength = 5;

/// A random closure-free value of a first-order type: reals from [-2, 2],
/// list lengths 0..5, variant cases uniform.
Value random_value(const Type& t, Rng& rng);

/// `slots` tangents of width k drawn from [-2, 2].
std::vector<std::vector<double>> random_tangents(std::size_t slots, std::size_t k, Rng& rng);

}  // namespace adl
