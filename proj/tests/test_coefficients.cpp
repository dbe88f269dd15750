#include <doctest.h>

#include "fdb/coefficients.hpp"
#include "oracles.hpp"

using namespace fdb;

TEST_CASE("hand-computed coefficients") {
  CHECK(c_coeff(make_partition({2}), 1, 1) == 1);
  CHECK(c_coeff(make_partition({2, 1}), 1, 1) == 2);
  CHECK(c_coeff(make_partition({2, 2}), 2, 1) == 1);
  CHECK(c_coeff(Partition{}, 0, 3) == 1);
  CHECK(c_coeff(make_partition({3, 1}), 0, 2) == 4);
  CHECK(faa_di_bruno_coeff(make_partition({2, 2})) == 3);
  CHECK(faa_di_bruno_coeff(make_partition({3, 1})) == 4);
}

TEST_CASE("coefficients count marked set partitions") {
  for (int s = 0; s <= 3; ++s) {
    for (int n = 0; n <= 6; ++n) {
      const auto counts = oracle::marked_set_partitions(n, s);
      for (int r = 0; r <= n; ++r) {
        for (const auto& lambda : enumerate_partitions(n + r * s)) {
          BigInt expected = 0;
          for (const auto& [key, count] : counts) {
            if (key.lambda == lambda && key.r == r) expected += count;
          }
          CHECK(c_coeff(lambda, r, s) == expected);
        }
      }
    }
  }
}

TEST_CASE("Faa di Bruno coefficients count set partitions by block type") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      CHECK(faa_di_bruno_coeff(lambda) == oracle::marked_coefficient(lambda, 0, 0));
    }
  }
}

TEST_CASE("vanishing and out-of-range arguments") {
  CHECK(c_coeff(make_partition({1, 1, 1}), 1, 1) == 0);
  CHECK(c_coeff_fraction(make_partition({3, 1}), 2, 2) == 0);
  CHECK_THROWS_AS(c_coeff(make_partition({1}), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(c_coeff(make_partition({1}), -1, 0), std::invalid_argument);
}

TEST_CASE("recurrence agrees with the closed form") {
  for (int s = 0; s <= 2; ++s) {
    CoefficientRecurrence recurrence(s);
    for (int n = 0; n <= 6; ++n) {
      for (int r = 0; r <= n; ++r) {
        for (const auto& lambda : enumerate_partitions(n + r * s)) {
          CHECK(recurrence(lambda, r) == c_coeff(lambda, r, s));
        }
      }
    }
  }
  CHECK(c_coeff_by_recurrence(make_partition({2, 1}), 1, 1) == 2);
}

TEST_CASE("coefficient table layout") {
  const auto table = coefficient_table(2, 1, true);
  CHECK(table.n == 2);
  CHECK(table.s == 1);
  REQUIRE(table.entries.size() == 5);
  const std::vector<std::tuple<int, std::vector<int>, int>> expected = {
      {0, {2}, 1}, {0, {1, 1}, 1}, {1, {3}, 1}, {1, {2, 1}, 2}, {2, {2, 2}, 1}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(table.entries[i].r == std::get<0>(expected[i]));
    CHECK(table.entries[i].partition.parts() == std::get<1>(expected[i]));
    CHECK(table.entries[i].coeff == std::get<2>(expected[i]));
  }
  const auto trivial = coefficient_table(0, 3);
  REQUIRE(trivial.entries.size() == 1);
  CHECK(trivial.entries[0].partition.empty());
  CHECK(trivial.entries[0].coeff == 1);
}

TEST_CASE("table size cap") {
  CHECK(max_weight_for(4, 3) == 16);
  CHECK_NOTHROW(coefficient_table(2, 7));
  CHECK_THROWS_AS(coefficient_table(9, 7), CapExceeded);
  CHECK_THROWS_AS(coefficient_table(4, 3, false, 15), CapExceeded);
  CHECK_NOTHROW(coefficient_table(4, 3, false, 16));
}
