#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fdb/numeric.hpp"

namespace fdb {

// Upper bound on partition weights handled by enumeration.
inline constexpr int kDefaultWeightCap = 64;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

void check_cap(int weight, int cap);

// A partition stored by multiplicities: (part, multiplicity) blocks with
// strictly decreasing parts and positive multiplicities. m_0 is never stored.
class Partition {
 public:
  using Block = std::pair<int, int>;

  Partition() = default;

  // Builds from blocks in any order; zero multiplicities are dropped,
  // repeated parts are merged. Rejects parts <= 0 and negative multiplicities.
  static Partition from_multiplicities(std::vector<Block> blocks);

  int weight() const noexcept { return weight_; }
  int length() const noexcept { return length_; }
  bool empty() const noexcept { return blocks_.empty(); }
  int largest_part() const noexcept { return blocks_.empty() ? 0 : blocks_.front().first; }

  // Zero for absent parts; throws for i <= 0.
  int multiplicity(int i) const;

  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  // Summand sequence in decreasing order.
  std::vector<int> parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;

  // Lexicographic order of the decreasing summand sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<Block> blocks_;
  int weight_ = 0;
  int length_ = 0;
};

// Finite multiset of non-negative integers, kept sorted in decreasing order.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<BigInt> elements);
  Multiset(std::initializer_list<long long> elements);

  std::size_t cardinality() const noexcept { return elements_.size(); }
  const std::vector<BigInt>& elements() const noexcept { return elements_; }
  bool contains(const BigInt& value) const;

  // Copy with one instance of `value` removed; throws if absent.
  Multiset without_one(const BigInt& value) const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<BigInt> elements_;
};

Partition make_partition(std::span<const int> parts);
Partition make_partition(std::initializer_list<int> parts);

// Sum of i^k m_i for k >= 1.
BigInt moment(const Partition& lambda, int k);

Partition truncate_above(const Partition& lambda, int s);

// Replaces each part a by a(a-1)...(a-s+1). Every part must exceed s.
Multiset pochhammer_map(const Partition& mu, int s);

Partition partition_union(const Partition& mu, const Partition& nu);
Partition shift_up(const Partition& mu, int s);
// Inverse of shift_up; every part must exceed s.
Partition shift_down(const Partition& lambda, int s);

// Drops one instance of j (lambda - e_j).
Partition remove_part(const Partition& lambda, int j);
// Lowers one instance of j to j - 1, dropping it when j = 1.
Partition decrement_part(const Partition& lambda, int j);

// Visits every partition of n in decreasing lexicographic order.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        int cap = kDefaultWeightCap);

std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultWeightCap);

// Partitions of n + r s with at least r parts exceeding s, in the same order.
void for_each_constrained(int n, int r, int s,
                          const std::function<void(const Partition&)>& visit,
                          int cap = kDefaultWeightCap);
std::vector<Partition> enumerate_constrained(int n, int r, int s, int cap = kDefaultWeightCap);

// Partitions nu with nu <= eta (multiplicity-wise) and length(nu) = r.
void for_each_subpartition(const Partition& eta, int r,
                           const std::function<void(const Partition&)>& visit);

}  // namespace fdb
