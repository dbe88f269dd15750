#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "fdb/numeric.hpp"
#include "fdb/partition.hpp"

namespace fdb {

// Exponents of the variables x_1, x_2, ... . Stored densely with trailing
// zeros trimmed, so equal exponent maps have equal representations.
class ExponentVector {
 public:
  ExponentVector() = default;
  static ExponentVector from_pairs(const std::vector<std::pair<int, int>>& index_exponent);
  // Exponent of y_i is m_i(lambda).
  static ExponentVector from_partition(const Partition& lambda);

  int get(int i) const noexcept;
  void add(int i, int delta);

  bool empty() const noexcept { return dense_.empty(); }
  int max_index() const noexcept { return static_cast<int>(dense_.size()); }
  int degree() const noexcept;           // sum e_i
  int weighted_degree() const noexcept;  // sum i e_i

  // (i, e_i) for e_i > 0 in ascending i.
  std::vector<std::pair<int, int>> terms() const;

  ExponentVector shifted(int s) const;
  ExponentVector operator+(const ExponentVector& other) const;

  const std::vector<int>& dense() const noexcept { return dense_; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  void trim();
  std::vector<int> dense_;
};

// Ascending weighted degree, then lexicographic exponents.
struct YTermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int wa = a.weighted_degree(), wb = b.weighted_degree();
    if (wa != wb) return wa < wb;
    return a < b;
  }
};

// Polynomial in y_1, y_2, ... with integer coefficients.
class YPolynomial {
 public:
  using Terms = std::map<ExponentVector, BigInt, YTermOrder>;

  YPolynomial() = default;
  static YPolynomial constant(const BigInt& c);
  static YPolynomial variable(int i);

  void add_term(const ExponentVector& exponents, const BigInt& coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coefficient(const ExponentVector& exponents) const;

  // y_i -> y_{i+s}
  YPolynomial shifted(int s) const;

  YPolynomial& operator+=(const YPolynomial& other);
  YPolynomial operator+(const YPolynomial& other) const;
  YPolynomial operator-(const YPolynomial& other) const;
  YPolynomial operator*(const YPolynomial& other) const;
  YPolynomial operator*(const BigInt& scalar) const;

  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

 private:
  Terms terms_;
};

}  // namespace fdb
