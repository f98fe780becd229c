#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adl/core/term.hpp"
#include "adl/core/type.hpp"
#include "adl/eval/slots.hpp"
#include "adl/eval/value.hpp"

namespace adl {

inline constexpr double kFdStep = 1e-5;

/// A closed term f : sigma -> tau with first-order sigma and tau.
struct Program {
  std::string name;
  Term fn;
  Type type;

  const Type& domain() const { return type.domain(); }
  const Type& codomain() const { return type.codomain(); }
};

/// True when `type` is an arrow between first-order types.
bool is_first_order_program(const Type& type);

struct Jacobian {
  std::size_t rows = 0;  // output real slots
  std::size_t cols = 0;  // input real slots
  std::vector<double> entries;  // row-major
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  double at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  double& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

/// Evaluates a program at a closure-free input.
Value run_program(const Program& p, const Value& input);

/// Central difference of every output slot along input slot `slot`.
std::vector<double> fd_column(const Program& p, const Value& input, std::size_t slot, double h = kFdStep);

/// d(output slot `out`) / d(input slot `in`) by central differences.
double fd_partial(const Program& p, const Value& input, std::size_t out, std::size_t in, double h = kFdStep);

Jacobian fd_jacobian(const Program& p, const Value& input, double h = kFdStep);

enum class FwdStrategy {
  Columns,     // one D^1 evaluation per input slot
  SinglePass,  // one D^k evaluation with k = input slots
};

Jacobian fwd_jacobian(const Program& p, const Value& input, FwdStrategy strategy = FwdStrategy::SinglePass);

/// Gradient program with k = input slots fed one-hot tangents.
Jacobian rev_jacobian(const Program& p, const Value& input);

/// Value of the program plus the Jacobian, from one reverse pass.
struct Gradient {
  Value value;
  Jacobian jacobian;
};

Gradient gradient(const Program& p, const Value& input, std::size_t k, bool reverse = true);

}  // namespace adl
