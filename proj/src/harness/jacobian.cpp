#include "adl/harness/jacobian.hpp"

#include <cmath>
#include <stdexcept>

#include "adl/ad/forward.hpp"
#include "adl/ad/reverse.hpp"
#include "adl/eval/eval.hpp"

namespace adl {

namespace {

Jacobian empty_jacobian(const Value& input, const Value& output) {
  Jacobian j;
  auto in = real_slots(input);
  auto out = real_slots(output);
  j.rows = out.size();
  j.cols = in.size();
  j.entries.assign(j.rows * j.cols, 0.0);
  for (const auto& s : out) j.row_labels.push_back(slot_str(s));
  for (const auto& s : in) j.col_labels.push_back(slot_str(s));
  return j;
}

// Evaluates a derivative-carrying program of type D^k(sigma) -> D^k(tau)
// at `input` with the given tangents; returns the split output.
SplitValue run_dual(const Term& derived, const Program& p, const Value& input, std::size_t k,
                    const std::vector<std::vector<double>>& tangents) {
  auto fn = eval(derived);
  auto out = apply(fn, with_tangents(input, k, tangents));
  return split_tangents(out, p.codomain(), k);
}

void require_first_order(const Program& p) {
  if (!is_first_order_program(p.type)) {
    throw std::invalid_argument("program '" + p.name + "' does not have a first-order function type");
  }
}

}  // namespace

bool is_first_order_program(const Type& type) {
  return type.is_arrow() && type.domain().first_order() && type.codomain().first_order();
}

Value run_program(const Program& p, const Value& input) { return apply(eval(p.fn), input); }

std::vector<double> fd_column(const Program& p, const Value& input, std::size_t slot, double h) {
  auto fn = eval(p.fn);
  auto xs = reals_of(input);
  if (slot >= xs.size()) throw std::out_of_range("input slot out of range");
  auto plus = xs;
  auto minus = xs;
  plus[slot] += h;
  minus[slot] -= h;
  auto fp = reals_of(apply(fn, with_reals(input, plus)));
  auto fm = reals_of(apply(fn, with_reals(input, minus)));
  std::vector<double> col(fp.size());
  for (std::size_t i = 0; i < col.size(); ++i) col[i] = (fp[i] - fm[i]) / (2.0 * h);
  return col;
}

double fd_partial(const Program& p, const Value& input, std::size_t out, std::size_t in, double h) {
  return fd_column(p, input, in, h).at(out);
}

Jacobian fd_jacobian(const Program& p, const Value& input, double h) {
  require_first_order(p);
  auto j = empty_jacobian(input, run_program(p, input));
  for (std::size_t c = 0; c < j.cols; ++c) {
    auto col = fd_column(p, input, c, h);
    for (std::size_t r = 0; r < j.rows; ++r) j.at(r, c) = col[r];
  }
  return j;
}

Jacobian fwd_jacobian(const Program& p, const Value& input, FwdStrategy strategy) {
  require_first_order(p);
  auto n = real_slots(input).size();
  if (strategy == FwdStrategy::Columns || n == 0) {
    auto derived = derive_term_fwd(p.fn, 1);
    auto j = empty_jacobian(input, run_program(p, input));
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<double>> tangents(n, std::vector<double>{0.0});
      tangents[c][0] = 1.0;
      auto out = run_dual(derived, p, input, 1, tangents);
      for (std::size_t r = 0; r < j.rows; ++r) j.at(r, c) = out.tangents[r][0];
    }
    return j;
  }
  return gradient(p, input, n, false).jacobian;
}

Jacobian rev_jacobian(const Program& p, const Value& input) {
  require_first_order(p);
  auto n = real_slots(input).size();
  if (n == 0) return empty_jacobian(input, run_program(p, input));
  return gradient(p, input, n, true).jacobian;
}

Gradient gradient(const Program& p, const Value& input, std::size_t k, bool reverse) {
  require_first_order(p);
  auto n = real_slots(input).size();
  if (k == 0) throw std::invalid_argument("tangent width k must be at least 1");
  auto derived = reverse ? grad_function(p.fn, p.type, k) : derive_term_fwd(p.fn, k);
  Gradient g;
  g.jacobian.cols = n;
  for (const auto& s : real_slots(input)) g.jacobian.col_labels.push_back(slot_str(s));
  // Blocks of k input directions per pass; the last block is padded with zeros.
  for (std::size_t start = 0; start == 0 || start < n; start += k) {
    std::vector<std::vector<double>> tangents(n, std::vector<double>(k, 0.0));
    for (std::size_t c = start; c < std::min(n, start + k); ++c) tangents[c][c - start] = 1.0;
    auto out = run_dual(derived, p, input, k, tangents);
    if (start == 0) {
      g.value = out.primal;
      auto rows = real_slots(out.primal);
      g.jacobian.rows = rows.size();
      for (const auto& s : rows) g.jacobian.row_labels.push_back(slot_str(s));
      g.jacobian.entries.assign(g.jacobian.rows * n, 0.0);
    }
    for (std::size_t r = 0; r < g.jacobian.rows; ++r) {
      for (std::size_t c = start; c < std::min(n, start + k); ++c) g.jacobian.at(r, c) = out.tangents[r][c - start];
    }
    if (n == 0) break;
  }
  return g;
}

}  // namespace adl
