#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "sgpq/dpartition.hpp"
#include "test_support.hpp"

using namespace sgpq;

namespace {

errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an sgpq::Error");
}

std::vector<std::vector<int>> parts_of(const std::vector<DPartition>& ps) {
  std::vector<std::vector<int>> out;
  for (const DPartition& p : ps) out.push_back(p.parts);
  return out;
}

}  // namespace

TEST_CASE("small enumerations are exact") {
  CHECK(parts_of(enumerate_d_partitions(1)) == std::vector<std::vector<int>>{{0}});
  CHECK(parts_of(enumerate_d_partitions(2)) == std::vector<std::vector<int>>{{0}, {1, 1}});
  CHECK(parts_of(enumerate_d_partitions(3)) ==
        std::vector<std::vector<int>>{{0}, {1, 2}, {1, 1, 1}, {2, 2, 2}});
  CHECK(parts_of(enumerate_d_partitions(4)) ==
        std::vector<std::vector<int>>{
            {0}, {1, 3}, {2, 2}, {1, 1, 2}, {2, 3, 3}, {1, 1, 1, 1}, {3, 3, 3, 3}});
}

TEST_CASE("counts up to d = 8") {
  std::vector<std::int64_t> expected{1, 2, 4, 7, 15, 20, 48, 65};
  for (int d = 1; d <= 8; ++d) CHECK(count_d_partitions(d) == expected[d - 1]);
}

TEST_CASE("validity predicate") {
  for (int d : {1, 2, 5, 9}) CHECK(is_d_partition({0}, d));
  CHECK(is_d_partition({1, 2}, 3));
  CHECK(is_d_partition({2, 1}, 3));  // order does not matter
  CHECK(!is_d_partition({1, 1, 2}, 2));     // entry out of range
  CHECK(!is_d_partition({1, 1, 1, 1}, 2));  // proper subset (1,1) hits 0
  CHECK(!is_d_partition({0, 1, 2}, 3));     // zero inside a longer sequence
  CHECK(!is_d_partition({1, 1}, 3));        // sum not divisible
  CHECK(!is_d_partition({}, 4));
  CHECK(!is_d_partition({1, 1}, 0));
}

TEST_CASE("enumeration agrees with brute force for d <= 6") {
  for (int d = 1; d <= 6; ++d)
    CHECK(parts_of(enumerate_d_partitions(d)) == testsup::brute_enumerate_d_partitions(d));
}

TEST_CASE("every enumerated partition is valid and short") {
  for (int d = 2; d <= 8; ++d)
    for (const DPartition& p : enumerate_d_partitions(d)) {
      CHECK(p.parts.size() <= static_cast<std::size_t>(d));
      CHECK(testsup::brute_is_d_partition(p.parts, d));
      CHECK(std::is_sorted(p.parts.begin(), p.parts.end()));
    }
}

TEST_CASE("canonical order is by length then lexicographic") {
  for (int d = 2; d <= 8; ++d) {
    auto ps = enumerate_d_partitions(d);
    for (std::size_t i = 1; i < ps.size(); ++i) {
      bool ordered = ps[i - 1].parts.size() < ps[i].parts.size() ||
                     (ps[i - 1].parts.size() == ps[i].parts.size() &&
                      ps[i - 1].parts < ps[i].parts);
      CHECK(ordered);
    }
  }
}

TEST_CASE("complement closure for nontrivial partitions") {
  for (int d = 2; d <= 8; ++d)
    for (const DPartition& p : enumerate_d_partitions(d)) {
      if (p.parts == std::vector<int>{0}) continue;
      std::vector<int> mirror;
      for (int x : p.parts) mirror.push_back(d - x);
      std::sort(mirror.begin(), mirror.end());
      CHECK(is_d_partition(mirror, d));
    }
}

TEST_CASE("single nonzero residues never qualify") {
  for (int d = 2; d <= 8; ++d)
    for (int r = 1; r < d; ++r) CHECK(!is_d_partition({r}, d));
}

TEST_CASE("decompose pinned examples") {
  auto parts = [](const std::vector<DPartition>& ps) { return parts_of(ps); };
  CHECK(parts(decompose({2, {1, 1, 1, 1}})) ==
        std::vector<std::vector<int>>{{1, 1}, {1, 1}});
  CHECK(parts(decompose({3, {0, 1, 2}})) == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(parts(decompose({3, {1, 1, 2, 2}})) == std::vector<std::vector<int>>{{1, 2}, {1, 2}});
  CHECK(parts(decompose({4, {0}})) == std::vector<std::vector<int>>{{0}});
  CHECK(parts(decompose({5, {}})).empty());
}

TEST_CASE("decompose rejects bad input") {
  CHECK(thrown_code([] { decompose({3, {1, 1}}); }) == errc::bad_residue_sum);
  CHECK(thrown_code([] { decompose({3, {1, 4, 1}}); }) == errc::out_of_range);
  CHECK(thrown_code([] { decompose({3, {-1, 1}}); }) == errc::out_of_range);
}

TEST_CASE("decompose is sound on random zero-sum sequences") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> d_dist(1, 9);
    int d = d_dist(rng);
    std::uniform_int_distribution<int> len_dist(1, 10);
    std::uniform_int_distribution<int> res_dist(0, d - 1);
    std::vector<int> residues;
    int len = len_dist(rng);
    int sum = 0;
    for (int i = 0; i + 1 < len; ++i) {
      residues.push_back(res_dist(rng));
      sum += residues.back();
    }
    residues.push_back((d - sum % d) % d);
    std::sort(residues.begin(), residues.end());

    std::vector<DPartition> pieces = decompose({d, residues});
    std::vector<int> merged;
    for (const DPartition& p : pieces) {
      CHECK(testsup::brute_is_d_partition(p.parts, d));
      merged.insert(merged.end(), p.parts.begin(), p.parts.end());
    }
    std::sort(merged.begin(), merged.end());
    CHECK(merged == residues);
  }
}

TEST_CASE("multiplicity counting") {
  CHECK(enumeration_function({3, {1, 1, 1}}, 1) == 3);
  CHECK(enumeration_function({3, {1, 2}}, 0) == 0);
  CHECK(enumeration_function({4, {2, 3, 3}}, 3) == 2);
  CHECK(thrown_code([] { enumeration_function({3, {1, 2}}, 3); }) == errc::out_of_range);
  CHECK(thrown_code([] { enumeration_function({3, {1, 2}}, -1); }) == errc::out_of_range);
  CHECK(part_multiplicities({4, {2, 3, 3}}) == std::vector<int>{0, 0, 1, 2});
}

TEST_CASE("enumeration cap") {
  CHECK(thrown_code([] { enumerate_d_partitions(13); }) == errc::limit_exceeded);
  CHECK(thrown_code([] { count_d_partitions(9, 8); }) == errc::limit_exceeded);
  CHECK(count_d_partitions(9, 9) > 0);  // opting in past the default works
  CHECK(thrown_code([] { enumerate_d_partitions(0); }) == errc::bad_parameter);
}
