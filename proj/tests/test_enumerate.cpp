#include "doctest.h"

#include <algorithm>
#include <set>

#include "partbij/enumerate.hpp"
#include "partbij/partition.hpp"

using namespace partbij;

TEST_CASE("partition stream order and counts") {
  std::vector<std::vector<Part>> got;
  for_each_partition(6, [&](std::span<const Part> parts) {
    got.emplace_back(parts.begin(), parts.end());
  });
  const std::vector<std::vector<Part>> expected = {
      {6},       {5, 1},       {4, 2},       {4, 1, 1},       {3, 3},
      {3, 2, 1}, {3, 1, 1, 1}, {2, 2, 2},    {2, 2, 1, 1},    {2, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, 1}};
  CHECK(got == expected);

  std::vector<std::vector<Part>> zero;
  for_each_partition(0, [&](std::span<const Part> parts) {
    zero.emplace_back(parts.begin(), parts.end());
  });
  CHECK(zero == std::vector<std::vector<Part>>{{}});

  CHECK(count_partitions(4) == 5);   // enumerated by hand: 4, 31, 22, 211, 1111
  CHECK(count_partitions(30) == 5604);
  CHECK_THROWS_AS(PartitionStream(-1), std::invalid_argument);
}

TEST_CASE("enumeration is duplicate-free and well-formed") {
  for (long long n = 0; n <= 14; ++n) {
    std::set<std::vector<Part>> seen;
    for_each_partition(n, [&](std::span<const Part> parts) {
      long long w = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(parts[i] >= 1);
        if (i > 0) CHECK(parts[i - 1] >= parts[i]);
        w += parts[i];
      }
      CHECK(w == n);
      CHECK(seen.insert({parts.begin(), parts.end()}).second);
    });
  }
}

TEST_CASE("pentagonal recurrence matches enumeration") {
  const std::vector<long long> expected_small = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42,
                                                 56, 77, 101, 135, 176, 231, 297, 385,
                                                 490, 627};
  const std::vector<long long> pent = pentagonal_counts(50);
  for (std::size_t n = 0; n < expected_small.size(); ++n)
    CHECK(pent[n] == expected_small[n]);
  for (long long n = 0; n <= 50; ++n)
    CHECK(count_partitions(n) == pent[static_cast<std::size_t>(n)]);
}

TEST_CASE("class members") {
  const std::vector<Partition> s17 = class_members(17, PartitionClass::splitting);
  CHECK(std::find(s17.begin(), s17.end(), Partition{7, 5, 3, 2}) != s17.end());

  CHECK(class_members(1, PartitionClass::odd) == std::vector<Partition>{Partition{1}});
  CHECK(class_members(1, PartitionClass::distinct) == std::vector<Partition>{Partition{1}});

  CHECK(class_members(9, PartitionClass::odd_distinct).size() == 2);
  CHECK(class_members(9, PartitionClass::splitting).size() == 2);
}

TEST_CASE("counting table") {
  const std::vector<ClassCountRow> table = counting_table(12);
  REQUIRE(table.size() == 13);
  for (PartitionClass c : kAllClasses) CHECK(table[0].count(c) == 1);

  // frozen small table, derived by brute-force enumeration
  const long long expected_sr[] = {1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 4, 4, 4};
  const long long expected_od[] = {1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3};
  for (long long n = 0; n <= 12; ++n) {
    const ClassCountRow& row = table[static_cast<std::size_t>(n)];
    CHECK(row.invariants_hold());
    CHECK(row.count(PartitionClass::spin_regular) == expected_sr[n]);
    CHECK(row.count(PartitionClass::odd_distinct) == expected_od[n]);
  }
}

TEST_CASE("verification sweeps are clean at small bounds") {
  for (const std::string& label : verification_labels()) {
    const VerificationReport rep = verify(label, 14);
    INFO(label);
    CHECK(rep.failures_total == 0);
    CHECK(rep.checked > 0);
  }
  CHECK_THROWS_AS(verify("nonsense", 5), std::invalid_argument);
}

TEST_CASE("verification aliases") {
  CHECK(verify("sylvester-formula-vs-pairwise", 8).label == "sylvester-agreement");
  CHECK(verify("bressoud-vs-original", 8).label == "bressoud-agreement");
}
