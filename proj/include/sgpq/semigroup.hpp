#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sgpq/errors.hpp"

namespace sgpq {

/// Largest membership table any sieve in this library will allocate (bits).
inline constexpr std::int64_t kMaxMembershipBound = std::int64_t{1} << 31;

/// Finite set of positive integers, stored sorted and without duplicates.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::int64_t> elements);
  GeneratorSet(std::initializer_list<std::int64_t> elements)
      : GeneratorSet(std::vector<std::int64_t>(elements)) {}

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t size() const noexcept { return elements_.size(); }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  std::int64_t gcd() const noexcept;

  bool operator==(const GeneratorSet&) const = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// Additive submonoid of N with finite complement.
///
/// Immutable after construction: the minimal generating set, the Frobenius
/// number (-1 encodes S == N) and a membership table indexed 0..frobenius()+1.
/// Every x > frobenius() is a member. Instances may be shared freely across
/// threads.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(const GeneratorSet& gens);

  /// Builds from a membership table with frobenius+2 entries (table {true}
  /// for frobenius == -1). The table is trusted to describe a numerical
  /// semigroup: closed under addition, containing every x > frobenius.
  static NumericalSemigroup from_membership(std::vector<bool> table, std::int64_t frobenius);

  static NumericalSemigroup naturals();

  const GeneratorSet& minimal_generators() const noexcept { return min_gens_; }
  std::int64_t frobenius() const noexcept { return frobenius_; }
  std::int64_t embedding_dimension() const noexcept {
    return static_cast<std::int64_t>(min_gens_.size());
  }
  bool is_full() const noexcept { return frobenius_ < 0; }
  const std::vector<bool>& membership() const noexcept { return table_; }

  /// Membership test for x >= 0; throws errc::negative_input otherwise.
  bool contains(std::int64_t x) const;

  bool operator==(const NumericalSemigroup&) const = default;

 private:
  NumericalSemigroup() = default;

  GeneratorSet min_gens_;
  std::int64_t frobenius_ = -1;
  std::vector<bool> table_;
};

NumericalSemigroup make_semigroup(const GeneratorSet& gens);
inline NumericalSemigroup make_semigroup(std::vector<std::int64_t> gens) {
  return make_semigroup(GeneratorSet(std::move(gens)));
}
inline NumericalSemigroup make_semigroup(std::initializer_list<std::int64_t> gens) {
  return make_semigroup(GeneratorSet(gens));
}
bool contains(const NumericalSemigroup& s, std::int64_t x);
std::int64_t frobenius_number(const NumericalSemigroup& s);

/// The finite complement N \ S, sorted ascending.
std::vector<std::int64_t> gaps(const NumericalSemigroup& s);

/// apery_set(s, n)[r] is the least member congruent to r mod n; n must be a
/// positive member of s.
std::vector<std::int64_t> apery_set(const NumericalSemigroup& s, std::int64_t n);

/// The fraction {x in N | d*x in S}, computed straight from the definition.
/// Deliberately independent of the generating-set construction so it can
/// serve as its oracle.
NumericalSemigroup quotient_oracle(const NumericalSemigroup& s, std::int64_t d);

/// True iff exactly one of z, F(S)-z is a member for every integer z.
/// Undefined (errc::full_monoid) for S == N.
bool is_symmetric(const NumericalSemigroup& s);

}  // namespace sgpq
