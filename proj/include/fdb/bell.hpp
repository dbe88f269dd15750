#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fdb/numeric.hpp"
#include "fdb/partition.hpp"
#include "fdb/ypolynomial.hpp"

namespace fdb {

// B_{n,k}: sum over lambda |- n of length k of the Faa di Bruno coefficient
// times prod y_i^{m_i}. B_{0,0} = 1; zero outside 0 <= k <= n.
YPolynomial partial_bell(int n, int k, int cap = kDefaultWeightCap);

// Sum over lambda |- n + r s with length k and length(lambda^{>s}) >= r of
// C_{lambda,r}^{(s)} prod y_i^{m_i}. Zero unless 0 <= r <= k <= n.
YPolynomial modified_partial_bell(int n, int k, int r, int s, int cap = kDefaultWeightCap);

YPolynomial modified_complete_bell(int n, int s, int cap = kDefaultWeightCap);

// sum_{p=r}^{n-k+r} binom(n,p) B_{n-p,k-r}(y_1,...) B_{p,r}(y_{s+1},...).
YPolynomial product_form_partial(int n, int k, int r, int s, int cap = kDefaultWeightCap);

// y_i -> c^i x. Result maps (power of c, power of x) to the coefficient.
std::map<std::pair<int, int>, BigInt> geometric_substitution(const YPolynomial& p);

// Stirling numbers of the second kind built from
//   S(n+1, k+1) = sum_l binom(n, l) S(n-l, k),  S(0,0) = 1.
// Zero outside 0 <= k <= n.
BigInt stirling2(int n, int k);

// Triangle S(0..n_max, 0..n_max) from the same recurrence.
std::vector<std::vector<BigInt>> stirling2_triangle(int n_max);

// Sum of C_{lambda,r}^{(0)} over the index set of modified_partial_bell(n,k,r,0),
// i.e. the coefficient left after y_i -> c^i x.
BigInt modified_stirling(int n, int k, int r, int cap = kDefaultWeightCap);

// sum_{p=r}^{n-k+r} binom(n,p) S(n-p,k-r) S(p,r). Equals modified_stirling.
BigInt stirling_convolution(int n, int k, int r);

// The same sum without binom(n,p). Differs from modified_stirling, e.g. at
// (2,2,1) where it gives 1 against 2; kept to report that discrepancy.
BigInt stirling_convolution_without_binomial(int n, int k, int r);

// sum_{l=0}^{n-k} binom(n,l) (S~(n-l,k,r) + S~(n-l,k,r-1)), which equals S~(n+1,k+1,r).
BigInt modified_stirling_step(int n, int k, int r, int cap = kDefaultWeightCap);

// The variant with the summand not depending on l:
// sum_{l=0}^{n-k} binom(n,l) (S~(n,k,r) + S~(n,k,r-1)). Reported, not relied on.
BigInt modified_stirling_step_unshifted(int n, int k, int r, int cap = kDefaultWeightCap);

// Coefficients S(n,0), ..., S(n,n) of T_n(x).
std::vector<BigInt> touchard(int n);

struct StirlingEntry {
  int n = 0;
  int k = 0;
  int r = 0;
  BigInt value;

  friend bool operator==(const StirlingEntry&, const StirlingEntry&) = default;
};

// S~(n,k,r) for 0 <= r <= k <= n <= n_max, ordered by n, k, r.
struct StirlingTable {
  int n_max = 0;
  std::vector<StirlingEntry> entries;

  BigInt at(int n, int k, int r) const;
};

StirlingTable stirling_table(int n_max, int cap = kDefaultWeightCap);

}  // namespace fdb
