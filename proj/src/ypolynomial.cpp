#include "fdb/ypolynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace fdb {

ExponentVector ExponentVector::from_pairs(const std::vector<std::pair<int, int>>& index_exponent) {
  ExponentVector out;
  for (const auto& [i, e] : index_exponent) out.add(i, e);
  return out;
}

ExponentVector ExponentVector::from_partition(const Partition& lambda) {
  ExponentVector out;
  out.dense_.assign(static_cast<std::size_t>(lambda.largest_part()), 0);
  for (const auto& [part, mult] : lambda.blocks()) out.dense_[static_cast<std::size_t>(part - 1)] = mult;
  return out;
}

int ExponentVector::get(int i) const noexcept {
  if (i < 1 || i > max_index()) return 0;
  return dense_[static_cast<std::size_t>(i - 1)];
}

void ExponentVector::add(int i, int delta) {
  if (i < 1) throw std::invalid_argument("variable index must be positive");
  if (i > max_index()) dense_.resize(static_cast<std::size_t>(i), 0);
  int& slot = dense_[static_cast<std::size_t>(i - 1)];
  if (slot + delta < 0) throw std::invalid_argument("negative exponent");
  slot += delta;
  trim();
}

int ExponentVector::degree() const noexcept { return std::accumulate(dense_.begin(), dense_.end(), 0); }

int ExponentVector::weighted_degree() const noexcept {
  int total = 0;
  for (std::size_t i = 0; i < dense_.size(); ++i) total += static_cast<int>(i + 1) * dense_[i];
  return total;
}

std::vector<std::pair<int, int>> ExponentVector::terms() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < dense_.size(); ++i) {
    if (dense_[i] != 0) out.emplace_back(static_cast<int>(i + 1), dense_[i]);
  }
  return out;
}

ExponentVector ExponentVector::shifted(int s) const {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  ExponentVector out;
  if (dense_.empty()) return out;
  out.dense_.assign(static_cast<std::size_t>(s), 0);
  out.dense_.insert(out.dense_.end(), dense_.begin(), dense_.end());
  return out;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out = dense_.size() >= other.dense_.size() ? *this : other;
  const ExponentVector& small = dense_.size() >= other.dense_.size() ? other : *this;
  for (std::size_t i = 0; i < small.dense_.size(); ++i) out.dense_[i] += small.dense_[i];
  return out;
}

void ExponentVector::trim() {
  while (!dense_.empty() && dense_.back() == 0) dense_.pop_back();
}

YPolynomial YPolynomial::constant(const BigInt& c) {
  YPolynomial p;
  p.add_term(ExponentVector{}, c);
  return p;
}

YPolynomial YPolynomial::variable(int i) {
  YPolynomial p;
  p.add_term(ExponentVector::from_pairs({{i, 1}}), 1);
  return p;
}

void YPolynomial::add_term(const ExponentVector& exponents, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt YPolynomial::coefficient(const ExponentVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

YPolynomial YPolynomial::shifted(int s) const {
  YPolynomial out;
  for (const auto& [exponents, coeff] : terms_) out.add_term(exponents.shifted(s), coeff);
  return out;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& other) {
  for (const auto& [exponents, coeff] : other.terms_) add_term(exponents, coeff);
  return *this;
}

YPolynomial YPolynomial::operator+(const YPolynomial& other) const {
  YPolynomial out = *this;
  out += other;
  return out;
}

YPolynomial YPolynomial::operator-(const YPolynomial& other) const {
  YPolynomial out = *this;
  for (const auto& [exponents, coeff] : other.terms_) out.add_term(exponents, -coeff);
  return out;
}

YPolynomial YPolynomial::operator*(const YPolynomial& other) const {
  YPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

YPolynomial YPolynomial::operator*(const BigInt& scalar) const {
  YPolynomial out;
  for (const auto& [exponents, coeff] : terms_) out.add_term(exponents, coeff * scalar);
  return out;
}

}  // namespace fdb
