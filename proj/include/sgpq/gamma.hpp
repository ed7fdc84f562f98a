#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgpq/dpartition.hpp"
#include "sgpq/semigroup.hpp"

namespace sgpq {

/// A generating set bucketed by residue mod d: classes[r] lists the
/// generators congruent to r, ascending.
struct ResidueClasses {
  int d = 1;
  std::vector<std::vector<std::int64_t>> classes;
};

/// One derivation of a Gamma element: the d-partition whose multiplicities
/// were matched and the generator multiset (nondecreasing) whose sum equals
/// d * value.
struct GammaWitness {
  std::int64_t value = 0;
  DPartition partition;
  std::vector<std::int64_t> generators;

  bool operator==(const GammaWitness&) const = default;
};

/// The generating set Gamma(S/d) with provenance. elements is sorted
/// ascending and duplicate-free; witnesses[i] derives elements[i] and keeps
/// the first derivation found in canonical partition order (witnesses are an
/// audit trail, not a uniqueness contract).
struct GammaSet {
  int d = 1;
  std::vector<std::int64_t> elements;
  std::vector<GammaWitness> witnesses;
};

/// Both embedding-dimension bounds for S/d next to the realized value.
/// Always nu_quotient <= gamma_size <= bound_partitioned and
/// nu_quotient <= bound_binomial.
struct BoundReport {
  std::int64_t nu_s = 0;         // embedding dimension of S
  std::int64_t nu_quotient = 0;  // embedding dimension of S/d
  std::int64_t gamma_size = 0;   // |Gamma(S/d)|
  std::int64_t bound_partitioned = 0;
  std::int64_t bound_binomial = 0;
  bool sharp_partitioned = false;  // nu_quotient == bound_partitioned
  bool sharp_binomial = false;     // nu_quotient == bound_binomial
};

/// Partition of G by residue mod d. Throws errc::zero_denominator for d < 1.
ResidueClasses residue_classes(const GeneratorSet& gens, int d);

/// Values contributed by one d-partition: every (g_1 + ... + g_m)/d over
/// multiset choices g_i in classes[lambda_i], the choices within one residue
/// class running over combinations with repetition. Sorted ascending,
/// duplicate-free; empty when some required class is empty.
std::vector<std::int64_t> gamma_lambda(const ResidueClasses& rc, const DPartition& p);

/// Gamma(S/d): the union of gamma_lambda over all of P(d), computed from the
/// minimal generators of S or from `gens` when given (`gens` need not be
/// minimal but must generate S, else errc::not_a_generating_set). Throws
/// errc::zero_denominator for d < 1 and errc::limit_exceeded past max_d.
GammaSet gamma(const NumericalSemigroup& s, int d,
               const std::optional<GeneratorSet>& gens = std::nullopt,
               int max_d = kDefaultMaxD);

/// S/d built by generating from Gamma(S/d) alone. Agrees with
/// quotient_oracle on every input, which the test suite exploits.
NumericalSemigroup quotient_via_gamma(const NumericalSemigroup& s, int d,
                                      int max_d = kDefaultMaxD);

/// C(n, k) under the conventions C(n, 0) = 1 for every integer n and
/// C(n, k) = 0 whenever n < k with k > 0. Throws errc::overflow if the
/// value exceeds int64.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Sum over P(d) of the product over residues r of
/// C(|classes[r]| + phi(r) - 1, phi(r)).
std::int64_t bound_partitioned(const ResidueClasses& rc, int max_d = kDefaultMaxD);
std::int64_t bound_partitioned(const NumericalSemigroup& s, int d, int max_d = kDefaultMaxD);

/// C(nu(S) + d - 1, d).
std::int64_t bound_binomial(std::int64_t nu_s, int d);
std::int64_t bound_binomial(const NumericalSemigroup& s, int d);

/// Everything above in one report, with nu(S/d) realized via the oracle.
BoundReport bound_report(const NumericalSemigroup& s, int d, int max_d = kDefaultMaxD);

/// S_d = <d+1, d^2, d^2+2d, d^2+3d, ..., d^2+(d-1)d> for d >= 2. Satisfies
/// S_d/d = {0, d, d+1, ...} and nu(S_d/d) = d = bound_partitioned(S_d, d):
/// the partitioned bound is attained.
NumericalSemigroup family_S_d(int d);

/// S_{n,d} = <d^n - d - 1 + 2^(i-1) d : i = 1..n> for n, d >= 2; the
/// generators are verified minimal (max < 2 min). Requires d^n <= 2^62
/// (errc::overflow otherwise).
NumericalSemigroup family_S_n_d(int n, int d);

}  // namespace sgpq
