#include "fdb/bell.hpp"

#include <mutex>
#include <stdexcept>

#include "fdb/coefficients.hpp"

namespace fdb {

namespace {

bool in_bell_range(int n, int k, int r) { return 0 <= r && r <= k && k <= n; }

}  // namespace

YPolynomial partial_bell(int n, int k, int cap) {
  YPolynomial out;
  if (k < 0 || k > n) return out;
  for_each_partition(n, [&](const Partition& lambda) {
    if (lambda.length() == k) out.add_term(ExponentVector::from_partition(lambda), faa_di_bruno_coeff(lambda));
  }, cap);
  return out;
}

YPolynomial modified_partial_bell(int n, int k, int r, int s, int cap) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  YPolynomial out;
  if (!in_bell_range(n, k, r)) return out;
  for_each_constrained(n, r, s, [&](const Partition& lambda) {
    if (lambda.length() == k) out.add_term(ExponentVector::from_partition(lambda), c_coeff(lambda, r, s));
  }, cap);
  return out;
}

YPolynomial modified_complete_bell(int n, int s, int cap) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  check_cap(max_weight_for(n, s), cap);
  YPolynomial out;
  for (int r = 0; r <= n; ++r) {
    for (int k = r; k <= n; ++k) out += modified_partial_bell(n, k, r, s, cap);
  }
  return out;
}

YPolynomial product_form_partial(int n, int k, int r, int s, int cap) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  YPolynomial out;
  if (!in_bell_range(n, k, r)) return out;
  for (int p = r; p <= n - k + r; ++p) {
    const YPolynomial left = partial_bell(n - p, k - r, cap);
    const YPolynomial right = partial_bell(p, r, cap).shifted(s);
    out += (left * right) * binomial(n, p);
  }
  return out;
}

std::map<std::pair<int, int>, BigInt> geometric_substitution(const YPolynomial& p) {
  std::map<std::pair<int, int>, BigInt> out;
  for (const auto& [exponents, coeff] : p.terms()) {
    auto& slot = out[{exponents.weighted_degree(), exponents.degree()}];
    slot += coeff;
  }
  std::erase_if(out, [](const auto& item) { return item.second == 0; });
  return out;
}

std::vector<std::vector<BigInt>> stirling2_triangle(int n_max) {
  if (n_max < 0) return {};
  std::vector<std::vector<BigInt>> S(static_cast<std::size_t>(n_max) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(n_max) + 1, 0));
  S[0][0] = 1;
  for (int m = 0; m < n_max; ++m) {
    for (int k = 0; k <= m; ++k) {
      BigInt total = 0;
      for (int l = 0; l <= m; ++l) total += binomial(m, l) * S[m - l][k];
      S[m + 1][k + 1] = total;
    }
  }
  return S;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex mutex;
  static std::vector<std::vector<BigInt>> cache;
  std::lock_guard lock(mutex);
  if (static_cast<int>(cache.size()) <= n) cache = stirling2_triangle(std::max(n, 2 * static_cast<int>(cache.size())));
  return cache[n][k];
}

BigInt modified_stirling(int n, int k, int r, int cap) {
  if (!in_bell_range(n, k, r)) return 0;
  BigInt total = 0;
  for_each_constrained(n, r, 0, [&](const Partition& lambda) {
    if (lambda.length() == k) total += c_coeff(lambda, r, 0);
  }, cap);
  return total;
}

BigInt stirling_convolution(int n, int k, int r) {
  BigInt total = 0;
  for (int p = std::max(r, 0); p <= n - k + r && p <= n; ++p) {
    total += binomial(n, p) * stirling2(n - p, k - r) * stirling2(p, r);
  }
  return total;
}

BigInt stirling_convolution_without_binomial(int n, int k, int r) {
  BigInt total = 0;
  for (int p = std::max(r, 0); p <= n - k + r && p <= n; ++p) {
    total += stirling2(n - p, k - r) * stirling2(p, r);
  }
  return total;
}

BigInt modified_stirling_step(int n, int k, int r, int cap) {
  BigInt total = 0;
  for (int l = 0; l <= n - k; ++l) {
    total += binomial(n, l) * (modified_stirling(n - l, k, r, cap) + modified_stirling(n - l, k, r - 1, cap));
  }
  return total;
}

BigInt modified_stirling_step_unshifted(int n, int k, int r, int cap) {
  const BigInt inner = modified_stirling(n, k, r, cap) + modified_stirling(n, k, r - 1, cap);
  BigInt total = 0;
  for (int l = 0; l <= n - k; ++l) total += binomial(n, l) * inner;
  return total;
}

std::vector<BigInt> touchard(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<BigInt> out;
  for (int k = 0; k <= n; ++k) out.push_back(stirling2(n, k));
  return out;
}

BigInt StirlingTable::at(int n, int k, int r) const {
  if (n < 0 || n > n_max || k < 0 || k > n || r < 0 || r > k) return 0;
  // Entries are laid out by n, then k, then r: row n holds (n+1)(n+2)/2 cells.
  const auto nn = static_cast<std::size_t>(n), kk = static_cast<std::size_t>(k);
  const std::size_t index = nn * (nn + 1) * (nn + 2) / 6 + kk * (kk + 1) / 2 + static_cast<std::size_t>(r);
  return entries.at(index).value;
}

StirlingTable stirling_table(int n_max, int cap) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  check_cap(n_max, cap);
  StirlingTable table{n_max, {}};
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) table.entries.push_back({n, k, r, modified_stirling(n, k, r, cap)});
    }
  }
  return table;
}

}  // namespace fdb
