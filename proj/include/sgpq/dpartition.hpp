#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sgpq/errors.hpp"

namespace sgpq {

/// Nondecreasing sequence over {0, ..., d-1} that sums to 0 mod d and has no
/// nonempty proper sub-multiset summing to 0 mod d. The only sequence with a
/// zero part is (0) itself, and no valid sequence is longer than d parts.
struct DPartition {
  int d = 1;
  std::vector<int> parts;  // nondecreasing

  bool operator==(const DPartition&) const = default;
  auto operator<=>(const DPartition&) const = default;
};

/// Arbitrary multiset of residues mod d whose sum is 0 mod d, kept
/// nondecreasing. The raw material decompose() splits into d-partitions.
struct ResidueSequence {
  int d = 1;
  std::vector<int> residues;

  bool operator==(const ResidueSequence&) const = default;
};

/// Enumeration is exact for any supported d, but |P(d)| grows quickly, so
/// callers opt in beyond this cap via the max_d arguments / --max-d flag.
inline constexpr int kDefaultMaxD = 12;

/// The enumeration engine keeps subset-sum residue sets in single 64-bit
/// masks, one bit per class mod d.
inline constexpr int kHardMaxD = 63;

/// True iff parts, sorted, is a d-partition. Returns false (never throws)
/// for out-of-range entries or d < 1.
bool is_d_partition(const std::vector<int>& parts, int d);

/// All of P(d) in canonical order: by length, then lexicographically by
/// parts; the trivial (0) always comes first. Throws errc::limit_exceeded
/// when d exceeds max_d (or the 64-bit mask width), errc::bad_parameter for
/// d < 1.
std::vector<DPartition> enumerate_d_partitions(int d, int max_d = kDefaultMaxD);

/// |P(d)|.
std::int64_t count_d_partitions(int d, int max_d = kDefaultMaxD);

/// Splits a zero-sum residue sequence into d-partitions whose multiset union
/// is exactly the input. Deterministic: zero entries split off first (one
/// trivial (0) each), then the lexicographically smallest (by sorted parts,
/// then length) d-partition inside the remainder is extracted repeatedly.
/// Throws errc::bad_residue_sum when the sum is nonzero mod d and
/// errc::out_of_range for entries outside [0, d-1].
std::vector<DPartition> decompose(const ResidueSequence& rs);

/// phi_p(n): how many parts of p equal n. Throws errc::out_of_range unless
/// 0 <= n < p.d.
int enumeration_function(const DPartition& p, int n);

/// All multiplicities at once: result[r] = enumeration_function(p, r).
std::vector<int> part_multiplicities(const DPartition& p);

}  // namespace sgpq
