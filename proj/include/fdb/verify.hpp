#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdb/partition.hpp"
#include "fdb/serialize.hpp"

namespace fdb {

enum class IdentityStatus { Pass, Fail, Informational };

const char* to_string(IdentityStatus status);

struct IdentityResult {
  std::string name;
  std::string statement;
  IdentityStatus status = IdentityStatus::Pass;
  long long instances = 0;
  std::string detail;  // first counterexample, or the discrepancy for informational entries

  bool ok() const { return status != IdentityStatus::Fail; }
};

// Each check runs exhaustively over the given bounds, counts every instance and
// keeps the first counterexample in `detail`.
namespace identities {

// Parameters of lambda - e_j and lambda_j for every lambda |- n <= max_n.
IdentityResult partition_modifications(int max_n);
// union / shift_up bookkeeping, truncation fixed points, shift_down inverse.
IdentityResult union_and_shift(int max_weight, int max_s);
// Newton residual and e_r = 0 above the cardinality, over all multisets.
IdentityResult newton_identity(int max_cardinality, int max_entry);
// subtract_transform against direct recomputation (c = b_l and c = 1).
IdentityResult subtract_transform_consistency(int max_cardinality, int max_entry);
// Sub-partition sum of e_r((eta)_s) against the generating function.
IdentityResult subpartition_elementary(int max_weight, int max_s);
// The mu^{+s} re-indexed form of the same sum for e_r((lambda^{>s})_s).
IdentityResult shifted_subpartition_elementary(int max_weight, int max_s);
// C^{(0)}_{lambda,r} = binom(l(lambda), r) C_{lambda,0}.
IdentityResult binomial_length(int max_n);
// C_{lambda,0}^{(s)} equals the Faa di Bruno coefficient.
IdentityResult zero_r_reduction(int max_n, int max_s);
// Every table coefficient has reduced denominator 1 and is positive.
IdentityResult integrality(int max_n, int max_s);
// n! e_r(lambda^{>1}) / prod j!^{m_j} m_j! is an integer for lambda |- n + r.
IdentityResult s1_integrality(int max_n);
// Recurrence against closed form on every table entry (r = 0 slice included).
IdentityResult recurrence_closed_form(int max_n, int max_s);
IdentityResult main_theorem_oracle(int max_n, int max_s, int cap = kDefaultWeightCap);
// Weighted degree sum i y_i = n + g s and f = l(lambda) - r >= 0.
IdentityResult weighted_degree_law(int max_n, int max_s);
IdentityResult faa_di_bruno_oracle(int max_n);
IdentityResult leibniz_product_oracle(int max_n);
IdentityResult psi_substitution_bridge(int max_n, int max_s);
// Random (f, g, phi) polynomial triples, exact equality for all n, s in range.
IdentityResult concrete_polynomials(int max_n, int max_s, std::uint64_t seed, int triples, int max_degree,
                                    int height);
// g constant: the expansion collapses to the Faa di Bruno sum.
IdentityResult concrete_constant_g(int max_n, std::uint64_t seed, int triples, int max_degree, int height);
// s = 0: the derivative of (f g) o phi.
IdentityResult concrete_s0_product(int max_n, std::uint64_t seed, int triples, int max_degree, int height);
IdentityResult modified_bell_r0(int max_n, int max_s);
IdentityResult bell_homogeneity(int max_n, int max_s);
IdentityResult bell_variable_absence(int max_n, int max_s);
IdentityResult bell_product_form(int max_n, int max_s);
IdentityResult bell_y_recurrence(int max_n, int max_s);
IdentityResult stirling_classical(int max_n);
IdentityResult stirling_s_independence(int max_n, int max_s);
IdentityResult stirling_convolution_identity(int max_n);
IdentityResult stirling_recurrence_identity(int max_n);
IdentityResult stirling_row_sum(int max_n);
IdentityResult touchard_binomial_type(int max_n);
// Informational: convolution without binom(n,p) against the definition.
IdentityResult convolution_without_binomial(int max_n);
// Informational: the l-independent recurrence summand against the definition.
IdentityResult unshifted_stirling_recurrence(int max_n);

}  // namespace identities

struct VerifyOptions {
  int max_n = 4;
  int max_s = 2;
  std::uint64_t seed = 1;
  int random_triples = 200;
  int max_degree = 5;
  int height = 10;
  int multiset_cardinality = 8;  // further bounded by max_n
  int multiset_entry_max = 12;
  int cap = kDefaultWeightCap;
  bool parallel = true;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<IdentityResult> results;

  bool passed() const;
};

VerifyReport run_verification(const VerifyOptions& options);

// Deterministic: no timings, fixed key and entry order.
Json verify_report_to_json(const VerifyReport& report);

}  // namespace fdb
