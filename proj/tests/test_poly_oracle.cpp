#include <doctest.h>

#include "fdb/diff_algebra.hpp"
#include "fdb/rational_polynomial.hpp"
#include "oracles.hpp"

using namespace fdb;

namespace {

oracle::Poly dense(const RationalPolynomial& p) { return p.coeffs(); }

}  // namespace

TEST_CASE("parsing coefficient lists") {
  const auto p = RationalPolynomial::parse("1/2, 0, -3");
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == Rational(1, 2));
  CHECK(p.coefficient(2) == -3);
  CHECK(p.coefficient(7) == 0);
  CHECK(p.to_string() == "1/2,0,-3");
  CHECK(RationalPolynomial::parse("0,0").is_zero());
  CHECK(RationalPolynomial::parse("2/4").coefficient(0) == Rational(1, 2));
  CHECK_THROWS_AS(RationalPolynomial::parse("1,/2"), std::invalid_argument);
  CHECK_THROWS_AS(RationalPolynomial::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(RationalPolynomial::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(RationalPolynomial::parse("1,"), std::invalid_argument);
}

TEST_CASE("arithmetic against the test reference") {
  RandomPolynomialSource source(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = source.next(4, 6);
    const auto b = source.next(3, 6);
    CHECK(dense(a * b) == oracle::trim(oracle::mul(dense(a), dense(b))));
    CHECK(dense(a + b) == oracle::trim(oracle::add(dense(a), dense(b))));
    CHECK(dense(a.compose(b)) == oracle::trim(oracle::compose(dense(a), dense(b))));
    CHECK(dense(a.derivative(2)) == oracle::trim(oracle::differentiate(dense(a), 2)));
    CHECK(a.pow(3) == a * a * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("hand case f = z^2, g = z, phi = t^2, n = 2, s = 1") {
  const auto check = check_main_theorem(RationalPolynomial::parse("0,0,1"), RationalPolynomial::parse("0,1"),
                                        RationalPolynomial::parse("0,0,1"), 2, 1);
  CHECK(check.equal);
  CHECK(check.lhs == RationalPolynomial::parse("0,0,0,40"));
  CHECK(check.rhs == check.lhs);
  CHECK(check.difference.is_zero());
}

TEST_CASE("direct derivative and expansion agree with the reference") {
  RandomPolynomialSource source(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = source.next(4, 5);
    const auto g = source.next(4, 5);
    const auto phi = source.next(3, 5);
    for (int n = 0; n <= 4; ++n) {
      for (int s = 0; s <= 2; ++s) {
        const auto expected = oracle::composed_derivative(dense(f), dense(g), dense(phi), n, s);
        const auto check = check_main_theorem(f, g, phi, n, s);
        CHECK(dense(check.lhs) == expected);
        CHECK(dense(check.rhs) == expected);
        CHECK(check.equal);
      }
    }
  }
}

TEST_CASE("a wrong expansion is caught") {
  const auto f = RationalPolynomial::parse("1,2,3");
  const auto g = RationalPolynomial::parse("0,1,1");
  const auto phi = RationalPolynomial::parse("1,1,0,2");
  DiffPolynomial broken = formula_expansion(3, 1);
  broken.add_term({1, 1, ExponentVector::from_pairs({{1, 1}, {2, 1}}), {}}, 1);
  const auto check = check_main_theorem(f, g, phi, 3, 1, broken);
  CHECK_FALSE(check.equal);
  CHECK_FALSE(check.difference.is_zero());
}

TEST_CASE("symbol evaluation") {
  const auto f = RationalPolynomial::parse("0,1,1");
  const auto g = RationalPolynomial::parse("2,0,1");
  const auto phi = RationalPolynomial::parse("1,3");
  const auto psi = RationalPolynomial::parse("0,0,5");
  SymbolEvaluator evaluator(f, g, phi, psi);
  CHECK(evaluator.evaluate(DiffPolynomial::unit()) == f.compose(phi) * g.compose(psi));
  DiffPolynomial p;
  p.add_term({1, 0, ExponentVector::from_pairs({{1, 2}}), ExponentVector::from_pairs({{1, 1}})}, 2);
  CHECK(evaluator.evaluate(p) ==
        f.derivative().compose(phi) * g.compose(psi) * phi.derivative().pow(2) * psi.derivative() *
            RationalPolynomial::constant(2));
  // phi is linear, so Y_2 evaluates to zero
  DiffPolynomial vanishing;
  vanishing.add_term({0, 0, ExponentVector::from_pairs({{2, 1}}), {}}, 1);
  CHECK(evaluator.evaluate(vanishing).is_zero());
}

TEST_CASE("random source is seed-deterministic") {
  RandomPolynomialSource a(5), b(5), c(6);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto pa = a.next(5, 10);
    CHECK(pa == b.next(5, 10));
    differs = differs || !(pa == c.next(5, 10));
    CHECK(pa.degree() <= 5);
    for (const auto& coeff : pa.coeffs()) {
      CHECK(abs(boost::multiprecision::numerator(coeff)) <= 10);
      CHECK(boost::multiprecision::denominator(coeff) <= 10);
    }
  }
  CHECK(differs);
}
