#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fdb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! for n >= 0. Values up to 512! come from a shared table.
const BigInt& factorial(int n);

// Zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

// a (a-1) ... (a-s+1); the empty product for s = 0.
BigInt falling_factorial(const BigInt& a, int s);

BigInt power(const BigInt& base, int exponent);

std::string to_decimal(const BigInt& value);
BigInt parse_decimal(const std::string& text);

}  // namespace fdb
