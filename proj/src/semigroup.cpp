#include "sgpq/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace sgpq {
namespace {

// Membership with the "everything past the table is a member" convention.
bool member_ext(const std::vector<bool>& table, std::int64_t x) {
  return x >= static_cast<std::int64_t>(table.size()) || table[static_cast<std::size_t>(x)];
}

// Minimal generators straight off a complete membership table (indices
// 0..F+1, every larger x a member). Every minimal generator other than the
// multiplicity m lies in the Apery set of m (s - m must be a gap, else
// s = m + (s-m) splits), and in a decomposition s = a + b of an Apery
// element both summands are again Apery elements (if a - m were a member,
// s - m = (a-m) + b would be too). So it suffices to mark pairwise sums of
// the at most m nonzero Apery elements.
std::vector<std::int64_t> minimal_generators_from_table(const std::vector<bool>& table,
                                                        std::int64_t frobenius) {
  std::int64_t m = 1;
  while (!member_ext(table, m)) ++m;  // multiplicity; m <= frobenius + 1
  if (m == 1) return {1};

  std::vector<std::int64_t> apery;  // least member per nonzero class mod m
  apery.reserve(static_cast<std::size_t>(m - 1));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  seen[0] = true;
  std::int64_t found = 1;
  for (std::int64_t x = m + 1; found < m; ++x) {
    auto r = static_cast<std::size_t>(x % m);
    if (!seen[r] && member_ext(table, x)) {
      seen[r] = true;
      apery.push_back(x);
      ++found;
    }
  }

  std::vector<bool> is_sum(static_cast<std::size_t>(2 * (frobenius + m) + 1), false);
  for (std::size_t i = 0; i < apery.size(); ++i)
    for (std::size_t j = i; j < apery.size(); ++j)
      is_sum[static_cast<std::size_t>(apery[i] + apery[j])] = true;

  std::vector<std::int64_t> gens{m};
  for (std::int64_t a : apery)
    if (!is_sum[static_cast<std::size_t>(a)]) gens.push_back(a);
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  for (std::int64_t g : elements_)
    if (g < 1) fail(errc::bad_input, "generators must be positive, got " + std::to_string(g));
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

std::int64_t GeneratorSet::gcd() const noexcept {
  std::int64_t g = 0;
  for (std::int64_t e : elements_) g = std::gcd(g, e);
  return g;
}

NumericalSemigroup NumericalSemigroup::naturals() {
  NumericalSemigroup s;
  s.min_gens_ = GeneratorSet({1});
  s.frobenius_ = -1;
  s.table_ = {true};
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(const GeneratorSet& gens) {
  if (gens.empty()) fail(errc::empty_generators, "a semigroup needs at least one generator");
  if (gens.gcd() != 1)
    fail(errc::non_coprime_generators,
         "generators must be coprime overall, gcd = " + std::to_string(gens.gcd()));

  const auto& g = gens.elements();
  if (g.front() == 1) return naturals();

  // Sieve up to g_min * g_max, which provably exceeds the Frobenius number.
  std::int64_t bound = 0;
  if (__builtin_mul_overflow(g.front(), g.back(), &bound) || bound + 1 > kMaxMembershipBound)
    fail(errc::limit_exceeded, "membership table would exceed the configured memory cap");

  // Generators are added in ascending order and skipped when already
  // reachable; the kept ones are exactly the minimal generating set (any
  // representation of g by other members uses only smaller elements).
  std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
  table[0] = true;
  std::vector<std::int64_t> kept;
  for (std::int64_t gen : g) {
    if (table[static_cast<std::size_t>(gen)]) continue;
    kept.push_back(gen);
    for (std::int64_t x = gen; x <= bound; ++x)
      if (table[static_cast<std::size_t>(x - gen)]) table[static_cast<std::size_t>(x)] = true;
  }

  std::int64_t frobenius = -1;
  for (std::int64_t x = bound; x >= 1; --x)
    if (!table[static_cast<std::size_t>(x)]) {
      frobenius = x;
      break;
    }
  table.resize(static_cast<std::size_t>(frobenius) + 2);

  NumericalSemigroup s;
  s.min_gens_ = GeneratorSet(std::move(kept));
  s.frobenius_ = frobenius;
  s.table_ = std::move(table);
  return s;
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<bool> table,
                                                       std::int64_t frobenius) {
  if (table.empty() || !table[0]) fail(errc::bad_input, "membership table must contain 0");

  std::int64_t largest_gap = -1;
  for (std::int64_t x = static_cast<std::int64_t>(table.size()) - 1; x >= 1; --x)
    if (!table[static_cast<std::size_t>(x)]) {
      largest_gap = x;
      break;
    }
  if (largest_gap > frobenius)
    fail(errc::bad_input, "membership table has a gap past the claimed Frobenius number");
  if (largest_gap == -1) return naturals();

  table.resize(static_cast<std::size_t>(largest_gap) + 2, true);
  table[static_cast<std::size_t>(largest_gap) + 1] = true;

  NumericalSemigroup s;
  s.min_gens_ = GeneratorSet(minimal_generators_from_table(table, largest_gap));
  s.frobenius_ = largest_gap;
  s.table_ = std::move(table);
  return s;
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) fail(errc::negative_input, "membership is defined on nonnegative integers");
  return member_ext(table_, x);
}

NumericalSemigroup make_semigroup(const GeneratorSet& gens) {
  return NumericalSemigroup::from_generators(gens);
}

bool contains(const NumericalSemigroup& s, std::int64_t x) { return s.contains(x); }

std::int64_t frobenius_number(const NumericalSemigroup& s) { return s.frobenius(); }

std::vector<std::int64_t> gaps(const NumericalSemigroup& s) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= s.frobenius(); ++x)
    if (!s.contains(x)) out.push_back(x);
  return out;
}

std::vector<std::int64_t> apery_set(const NumericalSemigroup& s, std::int64_t n) {
  if (n < 1 || !s.contains(n))
    fail(errc::ap_not_member, "Apery sets are defined for positive members only");
  std::vector<std::int64_t> ap(static_cast<std::size_t>(n), -1);
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < n; ++x) {
    auto r = static_cast<std::size_t>(x % n);
    if (ap[r] == -1 && s.contains(x)) {
      ap[r] = x;
      ++found;
    }
  }
  return ap;
}

NumericalSemigroup quotient_oracle(const NumericalSemigroup& s, std::int64_t d) {
  if (d < 1) fail(errc::zero_denominator, "quotient denominator must be positive");
  if (s.is_full()) return NumericalSemigroup::naturals();

  // Straight from the definition: x is in S/d iff d*x is in S. Everything
  // past floor(F(S)/d) is automatically a member.
  std::int64_t xmax = s.frobenius() / d + 1;
  std::vector<bool> table(static_cast<std::size_t>(xmax) + 1, false);
  for (std::int64_t x = 0; x <= xmax; ++x)
    table[static_cast<std::size_t>(x)] = s.contains(d * x);
  return NumericalSemigroup::from_membership(std::move(table), xmax - 1);
}

bool is_symmetric(const NumericalSemigroup& s) {
  if (s.is_full()) fail(errc::full_monoid, "symmetry is undefined for the full monoid");
  std::int64_t f = s.frobenius();
  for (std::int64_t z = 0; z <= f; ++z)
    if (s.contains(z) == s.contains(f - z)) return false;
  return true;
}

}  // namespace sgpq
