#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fdb/bell.hpp"
#include "fdb/coefficients.hpp"
#include "fdb/diff_algebra.hpp"
#include "fdb/partition.hpp"
#include "fdb/rational_polynomial.hpp"
#include "fdb/ypolynomial.hpp"

namespace fdb {

using Json = nlohmann::ordered_json;

// Big integers travel as decimal strings in every JSON schema.

// {"parts": [decreasing integers]}
Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

Json partitions_to_json(int n, const std::vector<Partition>& partitions);
std::string partitions_csv(const std::vector<Partition>& partitions);
std::string partitions_latex(const std::vector<Partition>& partitions);
std::string partitions_pretty(const std::vector<Partition>& partitions);

// {"n", "s", "entries": [{"r", "parts", "coeff"}]}
Json coefficient_table_to_json(const CoefficientTable& table);
CoefficientTable coefficient_table_from_json(const Json& j);
// Header "r,parts,coeff"; parts are space-separated.
std::string coefficient_table_csv(const CoefficientTable& table);
std::string coefficient_table_latex(const CoefficientTable& table);
std::string coefficient_table_pretty(const CoefficientTable& table);

// [{"f", "g", "y": {"i": e}, "z": {"i": e}, "coeff"}] in canonical order.
Json diff_polynomial_to_json(const DiffPolynomial& p);
DiffPolynomial diff_polynomial_from_json(const Json& j);
// f'·g·φ' + f·g'·φ''; primes up to order 3, f^(4) beyond. Z_i prints as ψ.
std::string diff_polynomial_pretty(const DiffPolynomial& p);
std::string diff_polynomial_latex(const DiffPolynomial& p);

// [{"y": {"i": e}, "coeff"}]
Json ypolynomial_to_json(const YPolynomial& p);
YPolynomial ypolynomial_from_json(const Json& j);
std::string ypolynomial_pretty(const YPolynomial& p);
std::string ypolynomial_latex(const YPolynomial& p);

// Header "n,k,r,value".
std::string stirling_table_csv(const StirlingTable& table);
Json stirling_table_to_json(const StirlingTable& table);
std::string stirling_table_latex(const StirlingTable& table);

// Coefficients as "p/q" strings, lowest degree first.
Json rational_polynomial_to_json(const RationalPolynomial& p);

// {"n", "s", "equal", "lhs", "rhs"} plus "difference" when unequal.
Json theorem_check_to_json(const TheoremCheck& check);

}  // namespace fdb
