#pragma once

#include <cstddef>
#include <map>

#include "fdb/numeric.hpp"
#include "fdb/partition.hpp"
#include "fdb/ypolynomial.hpp"

namespace fdb {

// F_a G_b prod Y_i^{y_i} prod Z_i^{z_i}, where F_a = f^(a) o phi,
// G_b = g^(b) o psi, Y_i = phi^(i) and Z_i = psi^(i). Every expression built
// here descends from F_0 G_0, so exactly one F and one G factor appear.
struct DiffMonomial {
  int f_order = 0;
  int g_order = 0;
  ExponentVector y;
  ExponentVector z;

  friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
};

// Canonical order: f_order descending, g_order ascending, then y and z
// exponents in descending lexicographic order (y_1 powers first).
struct DiffTermOrder {
  bool operator()(const DiffMonomial& a, const DiffMonomial& b) const;
};

class DiffPolynomial {
 public:
  using Terms = std::map<DiffMonomial, BigInt, DiffTermOrder>;

  DiffPolynomial() = default;
  static DiffPolynomial unit();  // F_0 G_0

  void add_term(const DiffMonomial& monomial, const BigInt& coeff);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const DiffMonomial& monomial) const;
  bool has_z() const noexcept;

  DiffPolynomial operator-(const DiffPolynomial& other) const;

  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

 private:
  Terms terms_;
};

// How D acts on the G family.
//   composed(s):  psi = phi^(s), so D G_b = G_{b+1} Y_{s+1}; Z is forbidden.
//   independent:  D G_b = G_{b+1} Z_1 and D Z_i = Z_{i+1}.
//   constant_g:   g is constant, D G_b = 0.
// In every mode D F_a = F_{a+1} Y_1 and D Y_i = Y_{i+1}.
struct Derivation {
  enum class Kind { Composed, Independent, ConstantG };
  Kind kind = Kind::Composed;
  int s = 0;

  static Derivation composed(int s);
  static Derivation independent() { return {Kind::Independent, 0}; }
  static Derivation constant_g() { return {Kind::ConstantG, 0}; }
};

DiffPolynomial derive(const DiffPolynomial& p, Derivation mode);

// D applied n times to F_0 G_0.
DiffPolynomial iterate_derivation(int n, Derivation mode, int cap = kDefaultWeightCap);

// The n-th derivative of (f o phi)(g o phi^(s)) by repeated Leibniz steps.
DiffPolynomial nth_derivative_expansion(int n, int s, int cap = kDefaultWeightCap);

// sum_{r, lambda} C_{lambda,r}^{(s)} F_{l(lambda)-r} G_r prod Y_i^{m_i}.
DiffPolynomial formula_expansion(int n, int s, int cap = kDefaultWeightCap);

// sum_{lambda |- n} (Faa di Bruno coefficient) F_{l(lambda)} G_0 prod Y_i^{m_i}.
DiffPolynomial faa_expansion(int n, int cap = kDefaultWeightCap);

// Leibniz rule combined with Faa di Bruno for (f o phi)(g o psi), grouped by
// rho = nu u mu with mu carrying the psi derivatives.
DiffPolynomial leibniz_product_expansion(int n, int cap = kDefaultWeightCap);

// Z_i -> Y_{i+s}.
DiffPolynomial substitute_psi(const DiffPolynomial& p, int s);

// D on the Y-only subalgebra: D Y_i = Y_{i+1}.
YPolynomial derive(const YPolynomial& p);

}  // namespace fdb
