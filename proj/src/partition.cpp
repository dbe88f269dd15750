#include "fdb/partition.hpp"

#include <algorithm>
#include <string>

namespace fdb {

void check_cap(int weight, int cap) {
  if (weight > cap) {
    throw CapExceeded("partition weight " + std::to_string(weight) + " exceeds cap " +
                      std::to_string(cap));
  }
}

Partition Partition::from_multiplicities(std::vector<Block> blocks) {
  bool canonical = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto [part, mult] = blocks[i];
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult == 0 || (i > 0 && blocks[i - 1].first <= part)) canonical = false;
  }
  if (!canonical) {
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.first > b.first; });
    std::vector<Block> merged;
    for (const auto& [part, mult] : blocks) {
      if (mult == 0) continue;
      if (!merged.empty() && merged.back().first == part) {
        merged.back().second += mult;
      } else {
        merged.emplace_back(part, mult);
      }
    }
    blocks = std::move(merged);
  }
  Partition result;
  result.blocks_ = std::move(blocks);
  for (const auto& [part, mult] : result.blocks_) {
    result.weight_ += part * mult;
    result.length_ += mult;
  }
  return result;
}

int Partition::multiplicity(int i) const {
  if (i <= 0) throw std::invalid_argument("multiplicity index must be positive");
  for (const auto& [part, mult] : blocks_) {
    if (part == i) return mult;
    if (part < i) break;
  }
  return 0;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const auto& [part, mult] : blocks_) out.insert(out.end(), static_cast<std::size_t>(mult), part);
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  // Walk both block lists as if they were summand sequences.
  std::size_t i = 0, j = 0;
  while (i < a.blocks_.size() && j < b.blocks_.size()) {
    const auto [pa, ma] = a.blocks_[i];
    const auto [pb, mb] = b.blocks_[j];
    if (pa != pb) return pa <=> pb;
    if (ma != mb) {
      // The sequence with the longer run continues with pa where the other
      // drops to a smaller part or ends.
      return ma <=> mb;
    }
    ++i;
    ++j;
  }
  return (a.blocks_.size() - i) <=> (b.blocks_.size() - j);
}

Multiset::Multiset(std::vector<BigInt> elements) : elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (e < 0) throw std::invalid_argument("multiset elements must be non-negative");
  }
  std::sort(elements_.begin(), elements_.end(), std::greater<>());
}

Multiset::Multiset(std::initializer_list<long long> elements)
    : Multiset(std::vector<BigInt>(elements.begin(), elements.end())) {}

bool Multiset::contains(const BigInt& value) const {
  return std::find(elements_.begin(), elements_.end(), value) != elements_.end();
}

Multiset Multiset::without_one(const BigInt& value) const {
  auto it = std::find(elements_.begin(), elements_.end(), value);
  if (it == elements_.end()) throw std::invalid_argument("value not in multiset");
  Multiset out = *this;
  out.elements_.erase(out.elements_.begin() + (it - elements_.begin()));
  return out;
}

Partition make_partition(std::span<const int> parts) {
  std::vector<Partition::Block> blocks;
  blocks.reserve(parts.size());
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(p));
    blocks.emplace_back(p, 1);
  }
  return Partition::from_multiplicities(std::move(blocks));
}

Partition make_partition(std::initializer_list<int> parts) {
  return make_partition(std::span<const int>(parts.begin(), parts.size()));
}

BigInt moment(const Partition& lambda, int k) {
  if (k <= 0) throw std::invalid_argument("moment index must be positive");
  BigInt total = 0;
  for (const auto& [part, mult] : lambda.blocks()) total += power(BigInt(part), k) * mult;
  return total;
}

Partition truncate_above(const Partition& lambda, int s) {
  if (s < 0) throw std::invalid_argument("truncation level must be non-negative");
  std::vector<Partition::Block> kept;
  for (const auto& block : lambda.blocks()) {
    if (block.first > s) kept.push_back(block);
  }
  return Partition::from_multiplicities(std::move(kept));
}

Multiset pochhammer_map(const Partition& mu, int s) {
  if (s < 0) throw std::invalid_argument("Pochhammer length must be non-negative");
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(mu.length()));
  for (const auto& [part, mult] : mu.blocks()) {
    if (part <= s) {
      throw std::invalid_argument("Pochhammer map needs parts > " + std::to_string(s) +
                                  ", got " + std::to_string(part));
    }
    const BigInt value = falling_factorial(part, s);
    values.insert(values.end(), static_cast<std::size_t>(mult), value);
  }
  return Multiset(std::move(values));
}

Partition partition_union(const Partition& mu, const Partition& nu) {
  std::vector<Partition::Block> blocks = mu.blocks();
  blocks.insert(blocks.end(), nu.blocks().begin(), nu.blocks().end());
  return Partition::from_multiplicities(std::move(blocks));
}

Partition shift_up(const Partition& mu, int s) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  std::vector<Partition::Block> blocks = mu.blocks();
  for (auto& block : blocks) block.first += s;
  return Partition::from_multiplicities(std::move(blocks));
}

Partition shift_down(const Partition& lambda, int s) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  std::vector<Partition::Block> blocks = lambda.blocks();
  for (auto& block : blocks) {
    if (block.first <= s) throw std::invalid_argument("shift_down needs every part > s");
    block.first -= s;
  }
  return Partition::from_multiplicities(std::move(blocks));
}

Partition remove_part(const Partition& lambda, int j) {
  if (lambda.multiplicity(j) == 0) {
    throw std::invalid_argument("remove_part: part " + std::to_string(j) + " not present");
  }
  std::vector<Partition::Block> blocks = lambda.blocks();
  for (auto& block : blocks) {
    if (block.first == j) --block.second;
  }
  return Partition::from_multiplicities(std::move(blocks));
}

Partition decrement_part(const Partition& lambda, int j) {
  if (lambda.multiplicity(j) == 0) {
    throw std::invalid_argument("decrement_part: part " + std::to_string(j) + " not present");
  }
  std::vector<Partition::Block> blocks = lambda.blocks();
  for (auto& block : blocks) {
    if (block.first == j) --block.second;
  }
  if (j > 1) blocks.emplace_back(j - 1, 1);
  return Partition::from_multiplicities(std::move(blocks));
}

namespace {

// Depth-first generation with parts chosen largest first, which yields
// decreasing lexicographic order. `big_needed` parts must exceed `threshold`.
class PartitionGenerator {
 public:
  PartitionGenerator(int threshold, int big_needed,
                     const std::function<void(const Partition&)>& visit)
      : threshold_(threshold), big_needed_(big_needed), visit_(visit) {}

  void run(int n) { descend(n, n, 0); }

 private:
  void descend(int remaining, int max_part, int big) {
    const int missing = std::max(0, big_needed_ - big);
    if (missing > 0) {
      if (max_part <= threshold_) return;
      if (static_cast<long long>(missing) * (threshold_ + 1) > remaining) return;
    }
    if (remaining == 0) {
      visit_(Partition::from_multiplicities(blocks_));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      const bool extends = !blocks_.empty() && blocks_.back().first == p;
      if (extends) {
        ++blocks_.back().second;
      } else {
        blocks_.emplace_back(p, 1);
      }
      descend(remaining - p, p, big + (p > threshold_ ? 1 : 0));
      if (extends) {
        --blocks_.back().second;
      } else {
        blocks_.pop_back();
      }
    }
  }

  int threshold_;
  int big_needed_;
  const std::function<void(const Partition&)>& visit_;
  std::vector<Partition::Block> blocks_;
};

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit, int cap) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  check_cap(n, cap);
  PartitionGenerator(0, 0, visit).run(n);
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

void for_each_constrained(int n, int r, int s, const std::function<void(const Partition&)>& visit,
                          int cap) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("negative enumeration parameter");
  if (r > n) return;
  check_cap(n + r * s, cap);
  PartitionGenerator(s, r, visit).run(n + r * s);
}

std::vector<Partition> enumerate_constrained(int n, int r, int s, int cap) {
  std::vector<Partition> out;
  for_each_constrained(n, r, s, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

void for_each_subpartition(const Partition& eta, int r,
                           const std::function<void(const Partition&)>& visit) {
  if (r < 0 || r > eta.length()) return;
  const auto& blocks = eta.blocks();
  std::vector<Partition::Block> chosen;
  // Suffix sums of multiplicities bound how many parts can still be taken.
  std::vector<int> available(blocks.size() + 1, 0);
  for (std::size_t i = blocks.size(); i-- > 0;) available[i] = available[i + 1] + blocks[i].second;

  std::function<void(std::size_t, int)> descend = [&](std::size_t index, int left) {
    if (left > available[index]) return;
    if (index == blocks.size()) {
      visit(Partition::from_multiplicities(chosen));
      return;
    }
    const auto [part, mult] = blocks[index];
    for (int take = std::min(mult, left); take >= 0; --take) {
      if (take > 0) chosen.emplace_back(part, take);
      descend(index + 1, left - take);
      if (take > 0) chosen.pop_back();
    }
  };
  descend(0, r);
}

}  // namespace fdb
