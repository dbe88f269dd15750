#include <doctest.h>

#include "fdb/bell.hpp"
#include "oracles.hpp"

using namespace fdb;

namespace {

YPolynomial y(std::vector<std::pair<int, int>> pairs, long long c = 1) {
  YPolynomial p;
  p.add_term(ExponentVector::from_pairs(pairs), c);
  return p;
}

}  // namespace

TEST_CASE("partial Bell polynomials") {
  CHECK(partial_bell(4, 2) == y({{2, 2}}, 3) + y({{1, 1}, {3, 1}}, 4));
  CHECK(partial_bell(0, 0) == YPolynomial::constant(1));
  CHECK(partial_bell(3, 0).is_zero());
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(partial_bell(n, k) == oracle::marked_bell(n, k, 0, 0));
  }
}

TEST_CASE("modified partial Bell polynomials count marked set partitions") {
  for (int s = 0; s <= 3; ++s) {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int r = 0; r <= k; ++r) {
          const auto expected = oracle::marked_bell(n, k, r, s);
          CHECK(modified_partial_bell(n, k, r, s) == expected);
          CHECK(product_form_partial(n, k, r, s) == expected);
        }
      }
    }
  }
  CHECK(modified_partial_bell(3, 2, 3, 1).is_zero());
  CHECK(modified_partial_bell(2, 3, 0, 1).is_zero());
}

TEST_CASE("modified complete Bell polynomial") {
  const auto expected = y({{1, 2}}) + y({{2, 1}}) + y({{1, 1}, {2, 1}}, 2) + y({{2, 2}}) + y({{3, 1}});
  CHECK(modified_complete_bell(2, 1) == expected);
  CHECK(modified_complete_bell(0, 4) == YPolynomial::constant(1));
}

TEST_CASE("geometric substitution collapses to one term") {
  const auto image = geometric_substitution(modified_partial_bell(4, 2, 1, 2));
  REQUIRE(image.size() == 1);
  CHECK(image.begin()->first == std::make_pair(6, 2));
  CHECK(image.begin()->second == binomial(2, 1) * oracle::stirling2(4, 2));
}

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(3, 4) == 0);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == oracle::stirling2(n, k));
  }
  const auto triangle = stirling2_triangle(6);
  CHECK(triangle[6][3] == 90);
}

TEST_CASE("modified Stirling numbers choose r of the k blocks") {
  CHECK(modified_stirling(2, 2, 1) == 2);
  CHECK(stirling_convolution(3, 2, 1) == 6);
  CHECK(stirling_convolution_without_binomial(2, 2, 1) == 1);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) {
        const BigInt expected = binomial(k, r) * oracle::stirling2(n, k);
        CHECK(modified_stirling(n, k, r) == expected);
        CHECK(stirling_convolution(n, k, r) == expected);
      }
    }
  }
}

TEST_CASE("one-step recurrence") {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k + 1; ++r) {
        CHECK(modified_stirling_step(n, k, r) == binomial(k + 1, r) * oracle::stirling2(n + 1, k + 1));
      }
    }
  }
  // the l-independent summand is off already at the first step
  CHECK(modified_stirling_step_unshifted(1, 0, 0) == 0);
  CHECK(modified_stirling(2, 1, 0) == 1);
}

TEST_CASE("Touchard polynomials") {
  CHECK(touchard(0) == std::vector<BigInt>{1});
  CHECK(touchard(3) == std::vector<BigInt>{0, 1, 3, 1});
}

TEST_CASE("Stirling table") {
  const auto table = stirling_table(4);
  CHECK(table.n_max == 4);
  CHECK(table.entries.size() == 35);
  std::size_t i = 0;
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r, ++i) {
        REQUIRE(i < table.entries.size());
        CHECK(table.entries[i].n == n);
        CHECK(table.entries[i].k == k);
        CHECK(table.entries[i].r == r);
        CHECK(table.at(n, k, r) == table.entries[i].value);
      }
    }
  }
  CHECK(table.at(2, 2, 1) == 2);
  CHECK(table.at(5, 1, 0) == 0);
  CHECK(table.at(2, 1, 2) == 0);
}
