#include "adl/core/fresh.hpp"

#include <atomic>
#include <charconv>

namespace adl::fresh {

namespace {

std::atomic<std::uint64_t> counter{0};

}  // namespace

std::string_view base_of(std::string_view name) {
  auto pos = name.rfind('#');
  if (pos == std::string_view::npos || pos == 0) return name;
  return name.substr(0, pos);
}

std::string name(std::string_view base) {
  auto n = counter.fetch_add(1, std::memory_order_relaxed);
  std::string out(base_of(base));
  out += '#';
  out += std::to_string(n);
  return out;
}

void observe(std::string_view name) {
  auto pos = name.rfind('#');
  if (pos == std::string_view::npos) return;
  std::uint64_t n = 0;
  auto digits = name.substr(pos + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return;
  auto cur = counter.load(std::memory_order_relaxed);
  while (cur <= n && !counter.compare_exchange_weak(cur, n + 1, std::memory_order_relaxed)) {
  }
}

void reset() { counter.store(0, std::memory_order_relaxed); }

std::uint64_t peek() { return counter.load(std::memory_order_relaxed); }

}  // namespace adl::fresh
