#include <doctest.h>

#include <set>

#include "fdb/partition.hpp"
#include "oracles.hpp"

using namespace fdb;

TEST_CASE("partition counts match the coin-change recurrence") {
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(BigInt(all.size()) == oracle::partition_count(n));
    std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& p : all) CHECK(p.weight() == n);
  }
}

TEST_CASE("partitions come out in decreasing lexicographic order") {
  const auto four = enumerate_partitions(4);
  const std::vector<std::vector<int>> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(four.size() == expected.size());
  for (std::size_t i = 0; i < four.size(); ++i) CHECK(four[i].parts() == expected[i]);
  for (int n = 1; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
  }
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0).front().empty());
}

TEST_CASE("multiplicity representation") {
  const auto p = Partition::from_multiplicities({{1, 2}, {3, 1}, {1, 1}, {2, 0}});
  CHECK(p.parts() == std::vector<int>{3, 1, 1, 1});
  CHECK(p.weight() == 6);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(1) == 3);
  CHECK(p.multiplicity(2) == 0);
  CHECK(p.largest_part() == 3);
  CHECK_THROWS_AS(p.multiplicity(0), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_multiplicities({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_multiplicities({{2, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition({2, 0}), std::invalid_argument);
  CHECK(make_partition({1, 3, 1}) == make_partition({3, 1, 1}));
}

TEST_CASE("moments, truncation and the Pochhammer image") {
  const auto lambda = make_partition({5, 3, 2, 1});
  CHECK(moment(lambda, 1) == 11);
  CHECK(moment(lambda, 2) == 39);
  CHECK(truncate_above(lambda, 2) == make_partition({5, 3}));
  CHECK(truncate_above(lambda, 0) == lambda);
  CHECK(truncate_above(lambda, 5).empty());
  CHECK(pochhammer_map(make_partition({5, 3}), 2) == Multiset{20, 6});
  CHECK(pochhammer_map(make_partition({5, 3}), 0) == Multiset{1, 1});
  CHECK_THROWS_AS(pochhammer_map(lambda, 2), std::invalid_argument);
}

TEST_CASE("removing and lowering a part") {
  const auto lambda = make_partition({3, 2, 1});
  CHECK(remove_part(lambda, 2) == make_partition({3, 1}));
  CHECK(decrement_part(lambda, 3) == make_partition({2, 2, 1}));
  CHECK(decrement_part(lambda, 1) == make_partition({3, 2}));
  CHECK_THROWS_AS(remove_part(lambda, 4), std::invalid_argument);
  CHECK_THROWS_AS(decrement_part(lambda, 5), std::invalid_argument);
}

TEST_CASE("union and shifts") {
  const auto mu = make_partition({2, 1});
  CHECK(partition_union(mu, make_partition({2})) == make_partition({2, 2, 1}));
  CHECK(shift_up(mu, 2) == make_partition({4, 3}));
  CHECK(shift_down(make_partition({4, 3}), 2) == mu);
  CHECK_THROWS_AS(shift_down(mu, 1), std::invalid_argument);
}

TEST_CASE("constrained enumeration filters the partitions of n + r s") {
  for (int s = 0; s <= 3; ++s) {
    for (int n = 0; n <= 7; ++n) {
      for (int r = 0; r <= n + 1; ++r) {
        std::vector<Partition> expected;
        for (const auto& p : enumerate_partitions(n + r * s)) {
          if (truncate_above(p, s).length() >= r) expected.push_back(p);
        }
        if (r > n) expected.clear();
        CHECK(enumerate_constrained(n, r, s) == expected);
      }
    }
  }
}

TEST_CASE("sub-partitions of a fixed length") {
  const auto eta = make_partition({3, 3, 1});
  std::vector<Partition> seen;
  for_each_subpartition(eta, 2, [&](const Partition& nu) { seen.push_back(nu); });
  std::set<Partition> distinct(seen.begin(), seen.end());
  CHECK(distinct == std::set<Partition>{make_partition({3, 3}), make_partition({3, 1})});
}

TEST_CASE("weight cap") {
  CHECK_THROWS_AS(enumerate_partitions(kDefaultWeightCap + 1), CapExceeded);
  CHECK_THROWS_AS(enumerate_partitions(11, 10), CapExceeded);
  CHECK_THROWS_AS(enumerate_constrained(5, 2, 3, 10), CapExceeded);
  CHECK_NOTHROW(enumerate_constrained(4, 2, 3, 10));
}

TEST_CASE("multisets") {
  const Multiset b{3, 0, 3, 5};
  CHECK(b.cardinality() == 4);
  CHECK(b.elements().front() == 5);
  CHECK(b.contains(0));
  CHECK(b.without_one(3) == Multiset{5, 3, 0});
  CHECK_THROWS_AS(b.without_one(4), std::invalid_argument);
  CHECK_THROWS_AS((Multiset{1, -1}), std::invalid_argument);
}
