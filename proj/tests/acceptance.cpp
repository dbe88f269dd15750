// One line per acceptance criterion; exit status is nonzero if any fails.
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include "fdb/coefficients.hpp"
#include "fdb/diff_algebra.hpp"
#include "fdb/rational_polynomial.hpp"
#include "fdb/verify.hpp"

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(const fdb::IdentityResult& r, long long min_instances = 1) {
    std::ostringstream line;
    line << r.name << "=" << r.instances;
    if (!r.ok()) line << " FAILED[" << r.detail << "]";
    if (r.instances < min_instances) line << " TOO-FEW";
    ok = ok && r.ok() && r.instances >= min_instances;
    note += (note.empty() ? "" : ", ") + line.str();
  }

  void require(bool cond, const std::string& what) {
    ok = ok && cond;
    note += (note.empty() ? "" : ", ") + what + (cond ? "" : " FAILED");
  }
};

using fdb::DiffMonomial;
using fdb::ExponentVector;
namespace id = fdb::identities;

Outcome criterion1() {
  Outcome o;
  o.require(id::main_theorem_oracle(8, 3), 36);
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.require(id::faa_di_bruno_oracle(10), 11);
  const auto faa = fdb::faa_expansion(4);
  const auto y22 = DiffMonomial{2, 0, ExponentVector::from_pairs({{2, 2}}), {}};
  const auto y13 = DiffMonomial{2, 0, ExponentVector::from_pairs({{1, 1}, {3, 1}}), {}};
  o.require(faa.coefficient(y22) == 3 && faa.coefficient(y13) == 4, "B_{4,2} = 3y_2^2 + 4y_1y_3");
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(id::recurrence_closed_form(9, 3));
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.require(id::integrality(10, 4));
  o.require(id::s1_integrality(10));
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.require(id::newton_identity(8, 12));
  o.require(id::subtract_transform_consistency(8, 12));
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.require(id::subpartition_elementary(12, 3));
  o.require(id::shifted_subpartition_elementary(12, 3));
  o.require(id::binomial_length(10));
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(id::leibniz_product_oracle(7), 8);
  o.require(id::psi_substitution_bridge(7, 3), 32);
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.require(id::concrete_polynomials(6, 2, 1, 200, 5, 10), 200 * 7 * 3);
  const auto check = fdb::check_main_theorem(fdb::RationalPolynomial::parse("0,0,1"),
                                             fdb::RationalPolynomial::parse("0,1"),
                                             fdb::RationalPolynomial::parse("0,0,1"), 2, 1);
  o.require(check.equal && check.rhs == fdb::RationalPolynomial::parse("0,0,0,40"), "f=z^2 g=z phi=t^2 -> 40t^3");
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.require(id::bell_product_form(7, 3));
  o.require(id::stirling_s_independence(8, 3));
  o.require(id::stirling_convolution_identity(10));
  o.require(id::stirling_recurrence_identity(9));
  o.require(id::stirling_row_sum(10));
  o.require(id::touchard_binomial_type(8));
  const auto printed = id::convolution_without_binomial(10);
  o.require(printed.status == fdb::IdentityStatus::Informational &&
                printed.detail.find("(n,k,r)=(2,2,1): form gives 1, definition gives 2") != std::string::npos,
            "convolution form without binomial reported at (2,2,1): 1 vs 2");
  const auto step = id::unshifted_stirling_recurrence(9);
  o.require(step.status == fdb::IdentityStatus::Informational && step.detail.find("first counterexample") == 0,
            "l-independent recurrence reported");
  return o;
}

Outcome criterion10() {
  Outcome o;
  fdb::VerifyOptions options;
  options.seed = 7;
  const auto first = fdb::verify_report_to_json(fdb::run_verification(options)).dump(2);
  const auto second = fdb::verify_report_to_json(fdb::run_verification(options)).dump(2);
  o.require(first == second, "two verify runs byte-identical");
  o.require(fdb::run_verification(options).passed(), "verify report passes");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"main expansion equals iterated derivation, n<=8, s<=3", criterion1},
      {"Faa di Bruno expansion, n<=10, with B_{4,2} spot values", criterion2},
      {"recurrence equals closed form, n<=9, s<=3", criterion3},
      {"integrality, n<=10, s<=4", criterion4},
      {"Newton residual and subtract transform, multisets up to 8 entries <= 12", criterion5},
      {"sub-partition elementary sums, m<=12, s<=3; binomial length form, n<=10", criterion6},
      {"product rule expansion and psi substitution, n<=7, s<=3", criterion7},
      {"random rational polynomial triples, 200 x n<=6 x s<=2, plus hand case", criterion8},
      {"modified Bell and Stirling identities, non-identities reported as informational", criterion9},
      {"deterministic verify report", criterion10},
  };
  std::vector<std::future<Outcome>> pending;
  for (const auto& [name, run] : criteria) pending.push_back(std::async(std::launch::async, run));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = pending[i].get();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " [" << o.note
              << "]" << std::endl;
  }
  return all ? 0 : 1;
}
