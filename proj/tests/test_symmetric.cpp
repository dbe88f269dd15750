#include <doctest.h>

#include "fdb/symmetric.hpp"
#include "oracles.hpp"

using namespace fdb;

TEST_CASE("elementary moments against subset sums") {
  const std::vector<std::vector<long long>> cases = {{}, {0}, {4}, {1, 2, 3}, {5, 5, 2, 0, 7}, {12, 11, 9, 3, 3, 1}};
  for (const auto& raw : cases) {
    std::vector<BigInt> values(raw.begin(), raw.end());
    const int R = static_cast<int>(values.size()) + 2;
    const auto e = elementary_moments(Multiset(values), R);
    REQUIRE(e.size() == static_cast<std::size_t>(R) + 1);
    CHECK(e[0] == 1);
    for (int r = 0; r <= R; ++r) CHECK(e[r] == oracle::elementary_by_subsets(values, r));
  }
}

TEST_CASE("power sums and the Newton residual") {
  const Multiset b{1, 2, 3};
  CHECK(power_sum(b, 1) == 6);
  CHECK(power_sum(b, 3) == 36);
  for (int r = 1; r <= 5; ++r) CHECK(newton_residual(b, r) == 0);
}

TEST_CASE("subtracting from one element") {
  const Multiset b{4, 2, 2};
  const int R = 3;
  CHECK(subtract_transform(b, 4, 4, R) == elementary_moments(Multiset{2, 2}, R));
  CHECK(subtract_transform(b, 2, 1, R) == elementary_moments(Multiset{4, 2, 1}, R));
  // b_l - c may go negative: (1 - 2X)(1 + 2X)^2.
  CHECK(subtract_transform(b, 4, 6, R) == ElementaryVector(std::vector<BigInt>{1, 2, -4, -8}));
}

TEST_CASE("elementary moments of the Pochhammer image by sub-partitions") {
  const auto eta = make_partition({5, 4, 4, 3});
  for (int s = 0; s <= 2; ++s) {
    std::vector<BigInt> values;
    for (int p : eta.parts()) values.push_back(falling_factorial(p, s));
    for (int r = 0; r <= 5; ++r) CHECK(elementary_by_subpartitions(eta, s, r) == oracle::elementary_by_subsets(values, r));
  }
  CHECK_THROWS_AS(elementary_by_subpartitions(make_partition({2, 1}), 1, 1), std::invalid_argument);
}

TEST_CASE("shifted sub-partition form") {
  const auto lambda = make_partition({4, 3, 3, 1, 1});
  for (int s = 0; s <= 3; ++s) {
    std::vector<BigInt> values;
    for (int p : truncate_above(lambda, s).parts()) values.push_back(falling_factorial(p, s));
    for (int r = 0; r <= 5; ++r) {
      CHECK(elementary_by_shifted_subpartitions(lambda, s, r) == oracle::elementary_by_subsets(values, r));
    }
  }
}
