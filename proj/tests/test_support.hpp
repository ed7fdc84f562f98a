#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sgpq/semigroup.hpp"

// Deliberately naive re-implementations used to cross-check the library.
// They share no code with the enumeration engine: validity is checked by
// walking every index subset, enumeration by filtering every nondecreasing
// candidate sequence.
namespace testsup {

inline bool brute_is_d_partition(const std::vector<int>& parts, int d) {
  if (d < 1 || parts.empty()) return false;
  for (int p : parts)
    if (p < 0 || p >= d) return false;
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0) return sorted.size() == 1;

  auto m = sorted.size();
  std::int64_t total = std::accumulate(sorted.begin(), sorted.end(), std::int64_t{0});
  if (total % d != 0) return false;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) sum += sorted[i];
    if (sum % d == 0) return false;  // proper nonempty subset reached 0
  }
  return true;
}

// Every nondecreasing sequence over [1, d-1] of length <= d, filtered, plus
// the trivial (0); canonical (length, then lexicographic) order.
inline std::vector<std::vector<int>> brute_enumerate_d_partitions(int d) {
  std::vector<std::vector<int>> out{{0}};
  std::vector<int> seq;
  auto dfs = [&](auto&& self, int low) -> void {
    if (!seq.empty() && brute_is_d_partition(seq, d)) out.push_back(seq);
    if (static_cast<int>(seq.size()) == d) return;
    for (int p = low; p < d; ++p) {
      seq.push_back(p);
      self(self, p);
      seq.pop_back();
    }
  };
  if (d > 1) dfs(dfs, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Coprime generator tuples with 2..max_nu entries drawn from [2, max_gen].
inline sgpq::GeneratorSet random_generators(std::mt19937_64& rng, int max_nu,
                                            std::int64_t max_gen) {
  std::uniform_int_distribution<int> nu_dist(2, max_nu);
  std::uniform_int_distribution<std::int64_t> gen_dist(2, max_gen);
  for (;;) {
    std::vector<std::int64_t> gens;
    int k = nu_dist(rng);
    for (int i = 0; i < k; ++i) gens.push_back(gen_dist(rng));
    sgpq::GeneratorSet gs(std::move(gens));
    if (gs.gcd() == 1) return gs;
  }
}

}  // namespace testsup
