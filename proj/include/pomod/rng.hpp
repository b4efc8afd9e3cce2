#pragma once

#include <cstdint>
#include <random>

#include "pomod/poset.hpp"

namespace pomod {

// Seeded deterministic RNG. Raw engine output is reduced by modulo so the
// streams do not depend on standard-library distribution internals.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }
  std::int64_t next_below(std::int64_t n) { return std::int64_t(next() % std::uint64_t(n)); }
  bool chance(double p) { return next() < std::uint64_t(double(~0ull) * p); }
};

// Random poset on elements e0..e{n-1}: arcs i -> j for i < j with the given
// density, then transitive closure (always acyclic).
inline PosetPtr random_poset(Rng& rng, int n, double density) {
  std::vector<std::string> ids;
  int digits = n > 10 ? 2 : 1;
  for (int i = 0; i < n; ++i) {
    std::string d = std::to_string(i);
    ids.push_back("e" + std::string(size_t(digits - int(d.size())), '0') + d);
  }
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(density)) arcs.emplace_back(ids[size_t(i)], ids[size_t(j)]);
  return transitive_closure(std::move(ids), arcs);
}

}  // namespace pomod
