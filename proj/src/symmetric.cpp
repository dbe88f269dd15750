#include "fdb/symmetric.hpp"

#include <stdexcept>
#include <string>

namespace fdb {

ElementaryVector::ElementaryVector(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) throw std::invalid_argument("e_0 must be 1");
}

ElementaryVector elementary_moments(const Multiset& b, int R) {
  if (R < 0) throw std::invalid_argument("degree bound must be non-negative");
  std::vector<BigInt> e(static_cast<std::size_t>(R) + 1, 0);
  e[0] = 1;
  int filled = 0;
  for (const auto& value : b.elements()) {
    // Multiply by (1 + value X), high degree first so e[r-1] is still old.
    filled = std::min(filled + 1, R);
    for (int r = filled; r >= 1; --r) e[r] += value * e[r - 1];
  }
  return ElementaryVector(std::move(e));
}

BigInt power_sum(const Multiset& b, int k) {
  if (k <= 0) throw std::invalid_argument("power sum index must be positive");
  BigInt total = 0;
  for (const auto& value : b.elements()) total += power(value, k);
  return total;
}

BigInt newton_residual(const Multiset& b, int r) {
  if (r < 1) throw std::invalid_argument("Newton residual needs r >= 1");
  const ElementaryVector e = elementary_moments(b, r);
  BigInt total = 0;
  for (int k = 1; k <= r; ++k) {
    const BigInt term = power_sum(b, k) * e[static_cast<std::size_t>(r - k)];
    if (k % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total - r * e[static_cast<std::size_t>(r)];
}

ElementaryVector subtract_transform(const Multiset& b, const BigInt& l_value, const BigInt& c, int R) {
  if (!b.contains(l_value)) {
    throw std::invalid_argument("subtract_transform: " + l_value.str() + " is not in the multiset");
  }
  const ElementaryVector e = elementary_moments(b, R);
  std::vector<BigInt> out(e.values());
  for (int r = 1; r <= R; ++r) {
    // sum_{k=1}^{r} (-b_l)^{k-1} e_{r-k}
    BigInt tail = 0;
    BigInt factor = 1;
    for (int k = 1; k <= r; ++k) {
      tail += factor * e[static_cast<std::size_t>(r - k)];
      factor *= -l_value;
    }
    out[static_cast<std::size_t>(r)] -= c * tail;
  }
  return ElementaryVector(std::move(out));
}

BigInt elementary_by_subpartitions(const Partition& eta, int s, int r) {
  if (r < 0) throw std::invalid_argument("elementary index must be non-negative");
  if (s < 0) throw std::invalid_argument("Pochhammer length must be non-negative");
  if (s >= 1 && !eta.empty() && eta.blocks().back().first <= s) {
    throw std::invalid_argument("elementary_by_subpartitions needs every part > " + std::to_string(s));
  }
  BigInt total = 0;
  for_each_subpartition(eta, r, [&](const Partition& nu) {
    BigInt term = 1;
    for (const auto& [part, mult] : nu.blocks()) {
      term *= binomial(eta.multiplicity(part), mult);
      term *= power(falling_factorial(part, s), mult);
    }
    total += term;
  });
  return total;
}

BigInt elementary_by_shifted_subpartitions(const Partition& lambda, int s, int r) {
  if (r < 0 || s < 0) throw std::invalid_argument("negative parameter");
  const Partition top = truncate_above(lambda, s);
  // Candidates mu are exactly the shifted-down sub-partitions of lambda^{>s}.
  const Partition base = shift_down(top, s);
  BigInt total = 0;
  for_each_subpartition(base, r, [&](const Partition& mu) {
    BigInt term = 1;
    for (const auto& [part, mult] : mu.blocks()) {
      term *= binomial(lambda.multiplicity(part + s), mult);
      term *= power(factorial(part + s) / factorial(part), mult);
    }
    total += term;
  });
  return total;
}

}  // namespace fdb
