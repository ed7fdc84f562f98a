#include "sgpq/dpartition.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sgpq {
namespace {

// The subset-sum state both validators below carry: reach_all holds the
// residues hit by nonempty sub-multisets of the processed prefix, reach_prop
// the same but excluding the full prefix. Adding a part p maps
//   reach_all'  = reach_all  | shift(reach_all, p)  | {p}
//   reach_prop' = reach_all  | shift(reach_prop, p) | {p}
// (a formerly-full prefix becomes proper once p arrives; p alone is proper
// only when the prefix was nonempty). Condition 3 fails exactly when
// reach_prop' gains residue 0.

constexpr std::uint64_t bit(int r) { return std::uint64_t{1} << r; }

std::uint64_t rotate_mod(std::uint64_t mask, int p, int d) {
  return ((mask << p) | (mask >> (d - p))) & (d == 64 ? ~std::uint64_t{0} : bit(d) - 1);
}

// Canonical listing order: shortest first, then lexicographic.
bool canonical_less(const DPartition& a, const DPartition& b) {
  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
  return a.parts < b.parts;
}

void check_d(int d) {
  if (d < 1) fail(errc::bad_parameter, "d must be a positive integer");
}

void check_cap(int d, int max_d) {
  if (d > max_d || d > kHardMaxD)
    fail(errc::limit_exceeded, "d = " + std::to_string(d) + " exceeds the enumeration cap " +
                                   std::to_string(std::min(max_d, kHardMaxD)));
}

}  // namespace

bool is_d_partition(const std::vector<int>& parts, int d) {
  if (d < 1 || parts.empty()) return false;
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= d) return false;
  if (sorted.front() == 0) return sorted.size() == 1;  // (0) is the only one with a zero
  // Any sequence meeting all three conditions has at most d parts (distinct
  // nonzero prefix sums), so longer inputs fail without further work.
  if (static_cast<int>(sorted.size()) > d) return false;

  std::int64_t sum = std::accumulate(sorted.begin(), sorted.end(), std::int64_t{0});
  if (sum % d != 0) return false;

  std::vector<bool> reach_all(static_cast<std::size_t>(d), false);
  std::vector<bool> reach_prop(static_cast<std::size_t>(d), false);
  reach_all[static_cast<std::size_t>(sorted.front())] = true;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    int p = sorted[i];
    std::vector<bool> all(static_cast<std::size_t>(d), false);
    std::vector<bool> prop(static_cast<std::size_t>(d), false);
    for (int r = 0; r < d; ++r) {
      int shifted = (r + p) % d;
      auto ur = static_cast<std::size_t>(r);
      auto us = static_cast<std::size_t>(shifted);
      if (reach_all[ur]) {
        all[ur] = true;
        all[us] = true;
        prop[ur] = true;
      }
      if (reach_prop[ur]) prop[us] = true;
    }
    all[static_cast<std::size_t>(p)] = true;
    prop[static_cast<std::size_t>(p)] = true;
    if (prop[0]) return false;
    reach_all = std::move(all);
    reach_prop = std::move(prop);
  }
  return true;
}

std::vector<DPartition> enumerate_d_partitions(int d, int max_d) {
  check_d(d);
  check_cap(d, max_d);

  std::vector<DPartition> out;
  out.push_back({d, {0}});
  if (d == 1) return out;

  // Depth-first over nondecreasing nonzero parts. At a live node no nonempty
  // proper sub-multiset sums to 0, so extending by p goes wrong exactly when
  // reach_prop holds d - p; a prefix summing to 0 is emitted and never
  // extended (it would sit inside any extension as a proper zero subset).
  std::vector<int> parts;
  auto dfs = [&](auto&& self, std::uint64_t reach_all, std::uint64_t reach_prop,
                 int sum) -> void {
    for (int p = parts.empty() ? 1 : parts.back(); p < d; ++p) {
      if (!parts.empty() && (reach_prop & bit(d - p))) continue;
      std::uint64_t all = reach_all | rotate_mod(reach_all, p, d) | bit(p);
      std::uint64_t prop =
          parts.empty() ? 0 : (reach_all | rotate_mod(reach_prop, p, d) | bit(p));
      parts.push_back(p);
      int next_sum = (sum + p) % d;
      if (next_sum == 0)
        out.push_back({d, parts});
      else if (static_cast<int>(parts.size()) < d)
        self(self, all, prop, next_sum);
      parts.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0);

  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::int64_t count_d_partitions(int d, int max_d) {
  return static_cast<std::int64_t>(enumerate_d_partitions(d, max_d).size());
}

std::vector<DPartition> decompose(const ResidueSequence& rs) {
  int d = rs.d;
  check_d(d);
  if (d > kHardMaxD)
    fail(errc::limit_exceeded, "d = " + std::to_string(d) + " exceeds the 64-bit mask width");
  std::int64_t sum = 0;
  for (int r : rs.residues) {
    if (r < 0 || r >= d)
      fail(errc::out_of_range, "residue " + std::to_string(r) + " is outside [0, d)");
    sum += r;
  }
  if (sum % d != 0) fail(errc::bad_residue_sum, "residue sequence must sum to 0 mod d");

  std::vector<int> count(static_cast<std::size_t>(d), 0);
  for (int r : rs.residues) ++count[static_cast<std::size_t>(r)];

  // Zeros can only ever stand alone, so they split off first.
  std::vector<DPartition> out(static_cast<std::size_t>(count[0]), DPartition{d, {0}});
  std::int64_t left = static_cast<std::int64_t>(rs.residues.size()) - count[0];
  count[0] = 0;

  // Remaining parts are nonzero with zero total; extract the
  // lexicographically smallest contained d-partition until nothing is left.
  // The search tries smaller parts first and stops at the first zero-sum
  // prefix, which visits candidates in exactly lexicographic order.
  std::vector<int> parts;
  auto extract = [&](auto&& self, std::uint64_t reach_all, std::uint64_t reach_prop,
                     int psum) -> bool {
    for (int p = parts.empty() ? 1 : parts.back(); p < d; ++p) {
      if (count[static_cast<std::size_t>(p)] == 0) continue;
      if (!parts.empty() && (reach_prop & bit(d - p))) continue;
      std::uint64_t all = reach_all | rotate_mod(reach_all, p, d) | bit(p);
      std::uint64_t prop =
          parts.empty() ? 0 : (reach_all | rotate_mod(reach_prop, p, d) | bit(p));
      parts.push_back(p);
      --count[static_cast<std::size_t>(p)];
      int next_sum = (psum + p) % d;
      if (next_sum == 0 || (static_cast<int>(parts.size()) < d && self(self, all, prop, next_sum)))
        return true;
      ++count[static_cast<std::size_t>(p)];
      parts.pop_back();
    }
    return false;
  };
  while (left > 0) {
    parts.clear();
    if (!extract(extract, 0, 0, 0))
      throw std::logic_error("zero-sum residue sequence failed to decompose");
    out.push_back({d, parts});
    left -= static_cast<std::int64_t>(parts.size());
  }
  return out;
}

int enumeration_function(const DPartition& p, int n) {
  if (n < 0 || n >= p.d)
    fail(errc::out_of_range, "residue " + std::to_string(n) + " is outside [0, d)");
  return static_cast<int>(std::count(p.parts.begin(), p.parts.end(), n));
}

std::vector<int> part_multiplicities(const DPartition& p) {
  std::vector<int> mult(static_cast<std::size_t>(p.d), 0);
  for (int r : p.parts) {
    if (r < 0 || r >= p.d)
      fail(errc::out_of_range, "part " + std::to_string(r) + " is outside [0, d)");
    ++mult[static_cast<std::size_t>(r)];
  }
  return mult;
}

}  // namespace sgpq
