#include "adl/harness/random.hpp"

#include <stdexcept>

namespace adl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

Value random_value(const Type& t, Rng& rng) {
  switch (t.kind()) {
    case Type::Kind::Real:
      return Value::real(rng.uniform(kSampleLo, kSampleHi));
    case Type::Kind::Prod: {
      std::vector<Value> items;
      for (const auto& c : t.components()) items.push_back(random_value(c, rng));
      return Value::tuple(std::move(items));
    }
    case Type::Kind::Variant: {
      const auto& c = t.cases()[rng.index(t.cases().size())];
      return Value::tag(c.first, random_value(c.second, rng));
    }
    case Type::Kind::List: {
      auto n = rng.index(kMaxListLength + 1);
      std::vector<Value> items;
      for (std::size_t i = 0; i < n; ++i) items.push_back(random_value(t.element(), rng));
      return Value::list(std::move(items));
    }
    case Type::Kind::Arrow:
      break;
  }
  throw std::invalid_argument("cannot sample a value of function type " + t.str());
}

std::vector<std::vector<double>> random_tangents(std::size_t slots, std::size_t k, Rng& rng) {
  std::vector<std::vector<double>> out(slots, std::vector<double>(k));
  for (auto& row : out) {
    for (auto& x : row) x = rng.uniform(kSampleLo, kSampleHi);
  }
  return out;
}

}  // namespace adl
