#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fdb/diff_algebra.hpp"
#include "fdb/numeric.hpp"
#include "fdb/partition.hpp"

namespace fdb {

// Univariate polynomial with exact rational coefficients, index = degree.
// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial identity();  // t

  // "c0,c1,..." with each entry an integer or "p/q".
  static RationalPolynomial parse(const std::string& text);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coefficient(int k) const;

  RationalPolynomial operator+(const RationalPolynomial& other) const;
  RationalPolynomial operator-(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const RationalPolynomial& other) const;
  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial operator*(const Rational& scalar) const;

  // this o inner, by Horner's rule in the polynomial ring.
  RationalPolynomial compose(const RationalPolynomial& inner) const;
  RationalPolynomial derivative(int order = 1) const;
  RationalPolynomial pow(int exponent) const;

  // "c0,c1,..." in the parse syntax.
  std::string to_string() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b) { return a + b; }
inline RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b) { return a * b; }
inline RationalPolynomial poly_compose(const RationalPolynomial& outer, const RationalPolynomial& inner) {
  return outer.compose(inner);
}
inline RationalPolynomial poly_derivative(const RationalPolynomial& p) { return p.derivative(); }

// Substitutes concrete polynomials into the formal symbols:
// F_a -> f^(a) o phi, G_b -> g^(b) o psi, Y_i -> phi^(i), Z_i -> psi^(i).
// Intermediate compositions and powers are cached per instance.
class SymbolEvaluator {
 public:
  SymbolEvaluator(RationalPolynomial f, RationalPolynomial g, RationalPolynomial phi, RationalPolynomial psi);

  RationalPolynomial evaluate(const DiffPolynomial& p);

 private:
  const RationalPolynomial& f_term(int a);
  const RationalPolynomial& g_term(int b);
  const RationalPolynomial& power_of(std::vector<std::vector<RationalPolynomial>>& cache,
                                     const RationalPolynomial& base_fn, int i, int e);

  RationalPolynomial f_, g_, phi_, psi_;
  std::vector<RationalPolynomial> f_cache_, g_cache_;
  std::vector<std::vector<RationalPolynomial>> phi_powers_, psi_powers_;
};

// (f o phi) * (g o phi^(s)) differentiated n times directly.
RationalPolynomial direct_nth_derivative(const RationalPolynomial& f, const RationalPolynomial& g,
                                         const RationalPolynomial& phi, int n, int s);

struct TheoremCheck {
  int n = 0;
  int s = 0;
  bool equal = false;
  RationalPolynomial lhs;
  RationalPolynomial rhs;
  RationalPolynomial difference;  // lhs - rhs
};

// Compares the direct derivative with the closed-form expansion instantiated
// on f, g, phi.
TheoremCheck check_main_theorem(const RationalPolynomial& f, const RationalPolynomial& g,
                                const RationalPolynomial& phi, int n, int s, int cap = kDefaultWeightCap);

// Same, reusing an expansion computed by formula_expansion(n, s).
TheoremCheck check_main_theorem(const RationalPolynomial& f, const RationalPolynomial& g,
                                const RationalPolynomial& phi, int n, int s,
                                const DiffPolynomial& expansion);

// Seed-deterministic source of random polynomials. Uses only the raw output
// of mt19937_64, so sequences agree across standard libraries.
class RandomPolynomialSource {
 public:
  explicit RandomPolynomialSource(std::uint64_t seed) : engine_(seed) {}

  // Degree uniform in [0, max_degree]; numerators in [-height, height],
  // denominators in [1, height]. The leading coefficient is nonzero.
  RationalPolynomial next(int max_degree, int height);

 private:
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::mt19937_64 engine_;
};

}  // namespace fdb
