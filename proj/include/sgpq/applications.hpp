#pragma once

#include <cstdint>
#include <vector>

#include "sgpq/semigroup.hpp"

namespace sgpq {

/// Smallest symmetric semigroup containing S with the same Frobenius
/// number, for F(S) odd: adds every x >= ceil(F/2) whose mirror F - x is a
/// gap. Throws errc::even_frobenius when F(S) is even and errc::full_monoid
/// for S == N. Idempotent; a fixed point exactly when S is symmetric.
NumericalSemigroup symmetric_closure(const NumericalSemigroup& s);

/// A symmetric semigroup T with F(T) = rho and T/d == S, built as the
/// symmetric closure of S_rho = <d g_1, ..., d g_n> union {rho+1, rho+2, ...}.
/// Requires d >= 2 (errc::bad_parameter), S != N (errc::full_monoid) and an
/// admissible rho: odd, not a multiple of d, rho > 2 d F(S)
/// (errc::bad_rho). The quotient guarantee is re-verified against the
/// oracle before returning; a mismatch (impossible unless the construction
/// itself is broken) raises std::logic_error.
NumericalSemigroup symmetric_cover(const NumericalSemigroup& s, int d, std::int64_t rho);

/// The `count` smallest admissible rho values for (s, d), ascending.
std::vector<std::int64_t> admissible_rhos(const NumericalSemigroup& s, int d, int count);

/// Closed-form generators of <n1, n2>/3 for n1, n2, 3 pairwise coprime:
/// {n1, n2, (n1+n2)/3} when n1 + n2 = 0 mod 3, else
/// {n1, n2, (n1+2 n2)/3, (2 n1+n2)/3} (then n1 + 2 n2 = 0 mod 3). The
/// returned set generates exactly <n1,n2>/3 but is not necessarily minimal.
/// Throws errc::bad_input when a precondition fails.
GeneratorSet quotient_two_gens_d3(std::int64_t n1, std::int64_t n2);

}  // namespace sgpq
