#include "fdb/coefficients.hpp"

#include <string>

#include "fdb/symmetric.hpp"

namespace fdb {

namespace {

BigInt denominator_of(const Partition& lambda) {
  BigInt d = 1;
  for (const auto& [part, mult] : lambda.blocks()) {
    d *= power(factorial(part), mult);
    d *= factorial(mult);
  }
  return d;
}

std::string describe(const Partition& lambda, int r, int s) {
  std::string text = "{";
  for (int p : lambda.parts()) text += (text.size() > 1 ? "," : "") + std::to_string(p);
  return text + "} r=" + std::to_string(r) + " s=" + std::to_string(s);
}

}  // namespace

BigInt faa_di_bruno_coeff(const Partition& lambda) {
  const BigInt numerator = factorial(lambda.weight());
  const BigInt denominator = denominator_of(lambda);
  if (numerator % denominator != 0) {
    throw IntegralityViolation("Faa di Bruno coefficient not integral for " + describe(lambda, 0, 0));
  }
  return numerator / denominator;
}

Rational c_coeff_fraction(const Partition& lambda, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("c_coeff: r and s must be non-negative");
  const int n = lambda.weight() - r * s;
  if (n < 0) throw std::invalid_argument("c_coeff: weight below r*s for " + describe(lambda, r, s));
  const Partition top = truncate_above(lambda, s);
  if (top.length() < r) return Rational(0);
  const ElementaryVector e = elementary_moments(pochhammer_map(top, s), r);
  return Rational(factorial(n) * e[static_cast<std::size_t>(r)], denominator_of(lambda));
}

BigInt c_coeff(const Partition& lambda, int r, int s) {
  const Rational value = c_coeff_fraction(lambda, r, s);
  if (boost::multiprecision::denominator(value) != 1) {
    throw IntegralityViolation("coefficient " + value.str() + " is not an integer for " +
                               describe(lambda, r, s));
  }
  return boost::multiprecision::numerator(value);
}

CoefficientRecurrence::CoefficientRecurrence(int s) : s_(s) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
}

BigInt CoefficientRecurrence::operator()(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  if (lambda.weight() < r * s_) {
    throw std::invalid_argument("c_coeff_by_recurrence: weight below r*s for " + describe(lambda, r, s_));
  }
  return evaluate(lambda, r);
}

BigInt CoefficientRecurrence::evaluate(const Partition& lambda, int r) {
  const int n = lambda.weight() - r * s_;
  if (n < 0) return 0;
  if (n == 0) return (lambda.empty() && r == 0) ? 1 : 0;

  auto key = std::make_pair(lambda, r);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  BigInt total = 0;
  for (const auto& [part, mult] : lambda.blocks()) {
    const int below = part > 1 ? lambda.multiplicity(part - 1) : 0;
    total += (below + 1) * evaluate(decrement_part(lambda, part), r);
  }
  if (r > 0 && lambda.multiplicity(s_ + 1) > 0) {
    total += evaluate(remove_part(lambda, s_ + 1), r - 1);
  }

  std::lock_guard lock(mutex_);
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt c_coeff_by_recurrence(const Partition& lambda, int r, int s) {
  CoefficientRecurrence recurrence(s);
  return recurrence(lambda, r);
}

int max_weight_for(int n, int s) { return n + n * s; }

CoefficientTable coefficient_table(int n, int s, bool verify, int cap) {
  if (n < 0 || s < 0) throw std::invalid_argument("coefficient_table: n and s must be non-negative");
  check_cap(max_weight_for(n, s), cap);
  CoefficientTable table{n, s, {}};
  CoefficientRecurrence recurrence(s);
  for (int r = 0; r <= n; ++r) {
    for_each_constrained(n, r, s, [&](const Partition& lambda) {
      BigInt value = c_coeff(lambda, r, s);
      if (value <= 0) {
        throw IntegralityViolation("non-positive coefficient for " + describe(lambda, r, s));
      }
      if (verify) {
        const BigInt check = recurrence(lambda, r);
        if (check != value) {
          throw VerificationFailure("recurrence gives " + check.str() + " but closed form gives " +
                                    value.str() + " for " + describe(lambda, r, s));
        }
      }
      table.entries.push_back({r, lambda, std::move(value)});
    }, cap);
  }
  return table;
}

}  // namespace fdb
