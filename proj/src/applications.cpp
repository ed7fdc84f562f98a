#include "sgpq/applications.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sgpq {

NumericalSemigroup symmetric_closure(const NumericalSemigroup& s) {
  if (s.is_full()) fail(errc::full_monoid, "the full monoid has no symmetric closure");
  std::int64_t f = s.frobenius();
  if (f % 2 == 0) fail(errc::even_frobenius, "symmetric closure needs an odd Frobenius number");

  // Add every x at or above F/2 whose mirror F - x is a gap; F itself stays
  // out because F - F = 0 is a member.
  std::int64_t half = (f + 1) / 2;
  std::vector<bool> table(static_cast<std::size_t>(f) + 2, false);
  table[0] = true;
  for (std::int64_t x = 1; x <= f; ++x)
    table[static_cast<std::size_t>(x)] = s.contains(x) || (x >= half && !s.contains(f - x));
  table[static_cast<std::size_t>(f) + 1] = true;
  return NumericalSemigroup::from_membership(std::move(table), f);
}

NumericalSemigroup symmetric_cover(const NumericalSemigroup& s, int d, std::int64_t rho) {
  if (s.is_full()) fail(errc::full_monoid, "covers are built for proper semigroups only");
  if (d < 2) fail(errc::bad_parameter, "covers need d >= 2");
  std::int64_t lower = 2 * d * s.frobenius();
  if (rho % 2 == 0 || rho % d == 0 || rho <= lower)
    fail(errc::bad_rho,
         "rho must be odd, not a multiple of d, and greater than " + std::to_string(lower));
  if (rho + 2 > kMaxMembershipBound)
    fail(errc::limit_exceeded, "rho exceeds the configured memory cap");

  // S_rho = <d g_1, ..., d g_n> plus everything past rho, materialized as a
  // table: sieve the scaled generators up to rho, then open the tail.
  std::vector<bool> table(static_cast<std::size_t>(rho) + 2, false);
  table[0] = true;
  for (std::int64_t g : s.minimal_generators().elements()) {
    std::int64_t dg = d * g;
    for (std::int64_t x = dg; x <= rho; ++x)
      if (table[static_cast<std::size_t>(x - dg)]) table[static_cast<std::size_t>(x)] = true;
  }
  table[static_cast<std::size_t>(rho) + 1] = true;

  NumericalSemigroup s_rho = NumericalSemigroup::from_membership(std::move(table), rho);
  NumericalSemigroup cover = symmetric_closure(s_rho);
  if (cover.frobenius() != rho || quotient_oracle(cover, d) != s)
    throw std::logic_error("symmetric cover failed to land on the requested quotient");
  return cover;
}

std::vector<std::int64_t> admissible_rhos(const NumericalSemigroup& s, int d, int count) {
  if (s.is_full()) fail(errc::full_monoid, "covers are built for proper semigroups only");
  if (d < 2) fail(errc::bad_parameter, "covers need d >= 2");
  std::vector<std::int64_t> out;
  for (std::int64_t rho = 2 * d * s.frobenius() + 1; static_cast<int>(out.size()) < count;
       rho += 2)
    if (rho % d != 0) out.push_back(rho);
  return out;
}

GeneratorSet quotient_two_gens_d3(std::int64_t n1, std::int64_t n2) {
  if (n1 < 1 || n2 < 1) fail(errc::bad_input, "generators must be positive");
  if (std::gcd(n1, n2) != 1) fail(errc::bad_input, "generators must be coprime");
  if (n1 % 3 == 0 || n2 % 3 == 0) fail(errc::bad_input, "neither generator may be divisible by 3");

  if ((n1 + n2) % 3 == 0) return GeneratorSet({n1, n2, (n1 + n2) / 3});
  // Otherwise both are congruent mod 3, and n1 + 2 n2 = 0 mod 3.
  return GeneratorSet({n1, n2, (n1 + 2 * n2) / 3, (2 * n1 + n2) / 3});
}

}  // namespace sgpq
