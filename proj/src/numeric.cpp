#include "fdb/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace fdb {

namespace {

constexpr int kFactorialTableSize = 512;

const std::vector<BigInt>& factorial_table() {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> values(kFactorialTableSize + 1);
    values[0] = 1;
    for (int i = 1; i <= kFactorialTableSize; ++i) values[i] = values[i - 1] * i;
    return values;
  }();
  return table;
}

}  // namespace

const BigInt& factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  if (n <= kFactorialTableSize) return factorial_table()[n];
  // Large arguments are rare; keep one slot per thread for the reference.
  thread_local BigInt scratch;
  scratch = factorial_table()[kFactorialTableSize];
  for (int i = kFactorialTableSize + 1; i <= n; ++i) scratch *= i;
  return scratch;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt falling_factorial(const BigInt& a, int s) {
  if (s < 0) throw std::invalid_argument("falling factorial with negative length");
  BigInt result = 1;
  for (int v = 0; v < s; ++v) result *= a - v;
  return result;
}

BigInt power(const BigInt& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace fdb
