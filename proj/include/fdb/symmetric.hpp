#pragma once

#include <cstddef>
#include <vector>

#include "fdb/numeric.hpp"
#include "fdb/partition.hpp"

namespace fdb {

// e_0, e_1, ..., e_R of some multiset. e_0 is always 1.
class ElementaryVector {
 public:
  explicit ElementaryVector(std::vector<BigInt> values);

  std::size_t size() const noexcept { return values_.size(); }
  int degree() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const BigInt& operator[](std::size_t r) const { return values_.at(r); }
  const std::vector<BigInt>& values() const noexcept { return values_; }

  friend bool operator==(const ElementaryVector&, const ElementaryVector&) = default;

 private:
  std::vector<BigInt> values_;
};

// Coefficients of prod (1 + b X) up to X^R.
ElementaryVector elementary_moments(const Multiset& b, int R);

BigInt power_sum(const Multiset& b, int k);

// sum_{k=1}^{r} (-1)^{k-1} p_k e_{r-k} - r e_r. Always zero.
BigInt newton_residual(const Multiset& b, int r);

// e-vector after replacing one copy of `l_value` by `l_value - c`, computed
// from the e-vector of b alone. With c = l_value this is b minus one copy.
ElementaryVector subtract_transform(const Multiset& b, const BigInt& l_value, const BigInt& c, int R);

// e_r of the Pochhammer image (eta)_s, summed over sub-partitions nu <= eta of
// length r with multiplicity weights prod binom(m_i(eta), m_i(nu)).
BigInt elementary_by_subpartitions(const Partition& eta, int s, int r);

// e_r of (lambda^{>s})_s summed over mu of length r with nu = mu^{+s}:
// prod_{i>s} binom(m_i(lambda), m_{i-s}(mu)) prod_i ((i+s)!/i!)^{m_i(mu)}.
BigInt elementary_by_shifted_subpartitions(const Partition& lambda, int s, int r);

}  // namespace fdb
