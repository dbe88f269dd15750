#include <doctest.h>

#include "fdb/bell.hpp"
#include "fdb/coefficients.hpp"
#include "fdb/diff_algebra.hpp"
#include "fdb/serialize.hpp"

using namespace fdb;

TEST_CASE("partition json") {
  const auto lambda = make_partition({3, 1, 1});
  CHECK(partition_to_json(lambda).dump() == R"({"parts":[3,1,1]})");
  CHECK(partition_from_json(partition_to_json(lambda)) == lambda);
  CHECK_THROWS(partition_from_json(Json::parse(R"({"parts":[1,3]})")));
  const auto listing = partitions_to_json(3, enumerate_partitions(3));
  CHECK(listing["count"] == 3);
  CHECK(partitions_pretty(enumerate_partitions(3)) == "(3)\n(2,1)\n(1,1,1)\n");
}

TEST_CASE("coefficient tables round-trip") {
  for (int s = 0; s <= 3; ++s) {
    for (int n = 0; n <= 5; ++n) {
      const auto table = coefficient_table(n, s);
      const auto back = coefficient_table_from_json(Json::parse(coefficient_table_to_json(table).dump()));
      CHECK(back.n == table.n);
      CHECK(back.s == table.s);
      REQUIRE(back.entries.size() == table.entries.size());
      for (std::size_t i = 0; i < table.entries.size(); ++i) {
        CHECK(back.entries[i].r == table.entries[i].r);
        CHECK(back.entries[i].partition == table.entries[i].partition);
        CHECK(back.entries[i].coeff == table.entries[i].coeff);
      }
    }
  }
}

TEST_CASE("coefficients are decimal strings") {
  const auto j = coefficient_table_to_json(coefficient_table(2, 1));
  CHECK(j["entries"][3]["coeff"] == "2");
  CHECK(coefficient_table_csv(coefficient_table(0, 3)) == "r,parts,coeff\n0,,1\n");
  const auto csv = coefficient_table_csv(coefficient_table(2, 1));
  CHECK(csv.find("1,2 1,2\n") != std::string::npos);
}

TEST_CASE("expansions round-trip") {
  for (int n = 0; n <= 4; ++n) {
    const auto p = leibniz_product_expansion(n);
    CHECK(diff_polynomial_from_json(Json::parse(diff_polynomial_to_json(p).dump())) == p);
    const auto q = formula_expansion(n, 2);
    CHECK(diff_polynomial_from_json(diff_polynomial_to_json(q)) == q);
  }
}

TEST_CASE("pretty expansions") {
  CHECK(diff_polynomial_pretty(formula_expansion(1, 1)) == "f'·g·φ' + f·g'·φ''");
  CHECK(diff_polynomial_pretty(DiffPolynomial::unit()) == "f·g");
  CHECK(diff_polynomial_pretty(DiffPolynomial{}) == "0");
  const auto four = diff_polynomial_pretty(faa_expansion(4));
  CHECK(four.find("f^(4)·g·φ'^4") != std::string::npos);
  CHECK(four.find("3·f''·g·φ''^2") != std::string::npos);
  CHECK(diff_polynomial_pretty(leibniz_product_expansion(1)) == "f'·g·φ' + f·g'·ψ'");
  CHECK(diff_polynomial_latex(formula_expansion(1, 0)).find("\\varphi") != std::string::npos);
}

TEST_CASE("y-polynomials") {
  const auto b = partial_bell(4, 2);
  CHECK(ypolynomial_pretty(b) == "3·y_2^2 + 4·y_1·y_3");
  CHECK(ypolynomial_from_json(Json::parse(ypolynomial_to_json(b).dump())) == b);
  const auto c = modified_complete_bell(3, 2);
  CHECK(ypolynomial_from_json(ypolynomial_to_json(c)) == c);
  CHECK(ypolynomial_latex(b) == "3\\,y_{2}^{2} + 4\\,y_{1} y_{3}");
}

TEST_CASE("Stirling table output") {
  const auto table = stirling_table(2);
  const auto csv = stirling_table_csv(table);
  CHECK(csv.rfind("n,k,r,value\n", 0) == 0);
  CHECK(csv.find("\n2,2,1,2\n") != std::string::npos);
  const auto j = stirling_table_to_json(table);
  CHECK(j["n_max"] == 2);
  CHECK(j["entries"].size() == table.entries.size());
  CHECK(j["entries"][8]["value"] == "2");
}
