#include "sgpq/gamma.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace sgpq {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in sum");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in product");
  return r;
}

// All derivations offered by one d-partition, in deterministic order:
// residue classes ascending, choices within a class running over
// combinations with repetition in lexicographic order.
void gamma_lambda_impl(const ResidueClasses& rc, const DPartition& p,
                       const std::function<void(GammaWitness&&)>& emit) {
  if (p.d != rc.d) fail(errc::bad_parameter, "partition and residue classes disagree on d");
  std::vector<int> mult = part_multiplicities(p);

  std::vector<int> needed;  // residues with at least one part
  for (int r = 0; r < p.d; ++r)
    if (mult[static_cast<std::size_t>(r)] > 0) {
      if (rc.classes[static_cast<std::size_t>(r)].empty()) return;  // nothing to offer
      needed.push_back(r);
    }

  std::vector<std::int64_t> chosen;
  auto walk = [&](auto&& self, std::size_t class_idx) -> void {
    if (class_idx == needed.size()) {
      std::int64_t sum = 0;
      for (std::int64_t g : chosen) sum = checked_add(sum, g);
      GammaWitness w;
      w.value = sum / p.d;
      w.partition = p;
      w.generators = chosen;
      std::sort(w.generators.begin(), w.generators.end());
      emit(std::move(w));
      return;
    }
    int r = needed[class_idx];
    const auto& pool = rc.classes[static_cast<std::size_t>(r)];
    int k = mult[static_cast<std::size_t>(r)];
    // Multisets of size k from pool as nondecreasing index tuples.
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    for (;;) {
      std::size_t before = chosen.size();
      for (std::size_t i : idx) chosen.push_back(pool[i]);
      self(self, class_idx + 1);
      chosen.resize(before);

      // Advance the nondecreasing odometer.
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] == pool.size() - 1) --pos;
      if (pos == 0) break;
      std::size_t next = idx[pos - 1] + 1;
      for (std::size_t i = pos - 1; i < idx.size(); ++i) idx[i] = next;
    }
  };
  walk(walk, 0);
}

}  // namespace

ResidueClasses residue_classes(const GeneratorSet& gens, int d) {
  if (d < 1) fail(errc::zero_denominator, "residue classes need a positive modulus");
  ResidueClasses rc;
  rc.d = d;
  rc.classes.resize(static_cast<std::size_t>(d));
  for (std::int64_t g : gens.elements())
    rc.classes[static_cast<std::size_t>(g % d)].push_back(g);
  return rc;
}

std::vector<std::int64_t> gamma_lambda(const ResidueClasses& rc, const DPartition& p) {
  std::vector<std::int64_t> values;
  gamma_lambda_impl(rc, p, [&](GammaWitness&& w) { values.push_back(w.value); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

GammaSet gamma(const NumericalSemigroup& s, int d, const std::optional<GeneratorSet>& gens,
               int max_d) {
  if (d < 1) fail(errc::zero_denominator, "quotient denominator must be positive");
  if (gens && make_semigroup(*gens) != s)
    fail(errc::not_a_generating_set, "supplied generators do not generate the semigroup");
  const GeneratorSet& g = gens ? *gens : s.minimal_generators();

  ResidueClasses rc = residue_classes(g, d);
  std::map<std::int64_t, GammaWitness> first;  // first witness per value wins
  for (const DPartition& p : enumerate_d_partitions(d, max_d))
    gamma_lambda_impl(rc, p, [&](GammaWitness&& w) {
      first.emplace(w.value, std::move(w));
    });

  GammaSet out;
  out.d = d;
  out.elements.reserve(first.size());
  out.witnesses.reserve(first.size());
  for (auto& [value, witness] : first) {
    out.elements.push_back(value);
    out.witnesses.push_back(std::move(witness));
  }
  return out;
}

NumericalSemigroup quotient_via_gamma(const NumericalSemigroup& s, int d, int max_d) {
  return make_semigroup(GeneratorSet(gamma(s, d, std::nullopt, max_d).elements));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;  // including negative n, by convention
  if (n < k) return 0;
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      fail(errc::overflow, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t bound_partitioned(const ResidueClasses& rc, int max_d) {
  std::int64_t total = 0;
  for (const DPartition& p : enumerate_d_partitions(rc.d, max_d)) {
    std::vector<int> mult = part_multiplicities(p);
    std::int64_t term = 1;
    for (int r = 0; r < rc.d && term != 0; ++r) {
      auto size = static_cast<std::int64_t>(rc.classes[static_cast<std::size_t>(r)].size());
      int k = mult[static_cast<std::size_t>(r)];
      term = checked_mul(term, binomial(size + k - 1, k));
    }
    total = checked_add(total, term);
  }
  return total;
}

std::int64_t bound_partitioned(const NumericalSemigroup& s, int d, int max_d) {
  return bound_partitioned(residue_classes(s.minimal_generators(), d), max_d);
}

std::int64_t bound_binomial(std::int64_t nu_s, int d) {
  if (d < 1) fail(errc::bad_parameter, "d must be a positive integer");
  return binomial(nu_s + d - 1, d);
}

std::int64_t bound_binomial(const NumericalSemigroup& s, int d) {
  return bound_binomial(s.embedding_dimension(), d);
}

BoundReport bound_report(const NumericalSemigroup& s, int d, int max_d) {
  GammaSet g = gamma(s, d, std::nullopt, max_d);
  NumericalSemigroup quotient = quotient_oracle(s, d);

  BoundReport r;
  r.nu_s = s.embedding_dimension();
  r.nu_quotient = quotient.embedding_dimension();
  r.gamma_size = static_cast<std::int64_t>(g.elements.size());
  r.bound_partitioned = bound_partitioned(s, d, max_d);
  r.bound_binomial = bound_binomial(s, d);
  r.sharp_partitioned = r.nu_quotient == r.bound_partitioned;
  r.sharp_binomial = r.nu_quotient == r.bound_binomial;
  return r;
}

NumericalSemigroup family_S_d(int d) {
  if (d < 2) fail(errc::bad_parameter, "the sharp family needs d >= 2");
  std::vector<std::int64_t> gens{static_cast<std::int64_t>(d) + 1};
  std::int64_t dd = checked_mul(d, d);
  for (int k = 0; k < d; ++k) {
    if (k == 1) continue;  // d^2 + d = d(d+1) would be redundant next to d+1
    gens.push_back(checked_add(dd, checked_mul(k, d)));
  }
  return make_semigroup(GeneratorSet(std::move(gens)));
}

NumericalSemigroup family_S_n_d(int n, int d) {
  if (n < 2 || d < 2) fail(errc::bad_parameter, "the power-sum family needs n, d >= 2");
  std::int64_t dn = 1;
  for (int i = 0; i < n; ++i) {
    dn = checked_mul(dn, d);
    if (dn > (std::int64_t{1} << 62)) fail(errc::overflow, "d^n exceeds the 2^62 input limit");
  }
  std::vector<std::int64_t> gens;
  std::int64_t pow2 = 1;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(checked_add(dn - d - 1, checked_mul(pow2, d)));
    pow2 = checked_mul(pow2, 2);
  }
  GeneratorSet g(gens);
  NumericalSemigroup s = make_semigroup(g);
  if (s.minimal_generators() != g)
    throw std::logic_error("power-sum family generators were expected to be minimal");
  return s;
}

}  // namespace sgpq
