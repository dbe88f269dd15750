#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fdb/numeric.hpp"
#include "fdb/partition.hpp"

namespace fdb {

// Thrown when an exact coefficient fails to reduce to an integer. This can
// only happen through an implementation bug.
class IntegralityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |lambda|! / prod_i (i!)^{m_i} m_i!  (number of set partitions of type lambda).
BigInt faa_di_bruno_coeff(const Partition& lambda);

// n! e_r((lambda^{>s})_s) / prod_i (i!)^{m_i} m_i!  with n = |lambda| - r s,
// as a reduced fraction. Requires |lambda| >= r s.
Rational c_coeff_fraction(const Partition& lambda, int r, int s);

// The fraction above, checked to be integral.
BigInt c_coeff(const Partition& lambda, int r, int s);

// Evaluates C_{lambda,r} for a fixed s through
//   C_{lambda,r} = sum_{j : m_j > 0} (m_{j-1} + 1) C_{lambda_j, r}
//                + [r > 0][m_{s+1} > 0] C_{lambda - e_{s+1}, r-1}
// down to the empty partition. Memoized; safe to share between threads.
class CoefficientRecurrence {
 public:
  explicit CoefficientRecurrence(int s);

  int s() const noexcept { return s_; }
  BigInt operator()(const Partition& lambda, int r);

 private:
  BigInt evaluate(const Partition& lambda, int r);

  int s_;
  std::mutex mutex_;
  std::map<std::pair<Partition, int>, BigInt> memo_;
};

BigInt c_coeff_by_recurrence(const Partition& lambda, int r, int s);

struct CoefficientEntry {
  int r = 0;
  Partition partition;
  BigInt coeff;

  friend bool operator==(const CoefficientEntry&, const CoefficientEntry&) = default;
};

// All (r, lambda) with 0 <= r <= n, lambda |- n + r s, length(lambda^{>s}) >= r.
// Entries are sorted by ascending r, then enumeration order.
struct CoefficientTable {
  int n = 0;
  int s = 0;
  std::vector<CoefficientEntry> entries;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

// Largest partition weight a table or expansion of order n at shift s touches.
int max_weight_for(int n, int s);

// With `verify` set every entry is recomputed by the recurrence and a
// mismatch throws VerificationFailure.
CoefficientTable coefficient_table(int n, int s, bool verify = false, int cap = kDefaultWeightCap);

}  // namespace fdb
