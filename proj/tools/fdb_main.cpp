// fdb: coefficient tables, derivative expansions, modified Bell and Stirling
// objects, and the identity verifier.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fdb/bell.hpp"
#include "fdb/coefficients.hpp"
#include "fdb/diff_algebra.hpp"
#include "fdb/rational_polynomial.hpp"
#include "fdb/serialize.hpp"
#include "fdb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;  // empty: per-command default
  std::uint64_t seed = 1;
  int cap = fdb::kDefaultWeightCap;
  std::string out;
};

std::string pick_format(const Globals& g, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not available for this command");
}

std::string dump(const fdb::Json& j) { return j.dump(2) + "\n"; }

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw UsageError(std::string(name) + " must be non-negative");
}

std::string run_partitions(const Globals& g, int n) {
  require_nonnegative(n, "--n");
  const auto parts = fdb::enumerate_partitions(n, g.cap);
  const auto f = pick_format(g, "pretty", {"json", "csv", "latex", "pretty"});
  if (f == "json") return dump(fdb::partitions_to_json(n, parts));
  if (f == "csv") return fdb::partitions_csv(parts);
  if (f == "latex") return fdb::partitions_latex(parts);
  return fdb::partitions_pretty(parts);
}

std::string run_coeff(const Globals& g, int n, int s, bool verify) {
  require_nonnegative(n, "--n");
  require_nonnegative(s, "--s");
  const auto table = fdb::coefficient_table(n, s, verify, g.cap);
  const auto f = pick_format(g, "pretty", {"json", "csv", "latex", "pretty"});
  if (f == "json") return dump(fdb::coefficient_table_to_json(table));
  if (f == "csv") return fdb::coefficient_table_csv(table);
  if (f == "latex") return fdb::coefficient_table_latex(table);
  return fdb::coefficient_table_pretty(table);
}

std::string run_expand(const Globals& g, int n, int s, bool verify) {
  require_nonnegative(n, "--n");
  require_nonnegative(s, "--s");
  const auto f = pick_format(g, "pretty", {"json", "latex", "pretty"});
  const auto expansion = fdb::formula_expansion(n, s, g.cap);
  if (verify && !(expansion == fdb::nth_derivative_expansion(n, s, g.cap))) {
    throw fdb::VerificationFailure("expansion differs from the iterated derivation");
  }
  if (f == "json") return dump(fdb::diff_polynomial_to_json(expansion));
  if (f == "latex") return fdb::diff_polynomial_latex(expansion) + "\n";
  return fdb::diff_polynomial_pretty(expansion) + "\n";
}

std::string run_bell(const Globals& g, int n, int s, std::optional<int> k, std::optional<int> r) {
  require_nonnegative(n, "--n");
  require_nonnegative(s, "--s");
  if (r && !k) throw UsageError("--r needs --k");
  fdb::YPolynomial p;
  if (k) {
    require_nonnegative(*k, "--k");
    p = fdb::modified_partial_bell(n, *k, r.value_or(0), s, g.cap);
  } else {
    p = fdb::modified_complete_bell(n, s, g.cap);
  }
  const auto f = pick_format(g, "pretty", {"json", "latex", "pretty"});
  if (f == "json") return dump(fdb::ypolynomial_to_json(p));
  if (f == "latex") return fdb::ypolynomial_latex(p) + "\n";
  return fdb::ypolynomial_pretty(p) + "\n";
}

std::string run_stirling(const Globals& g, int n_max) {
  require_nonnegative(n_max, "--n-max");
  const auto table = fdb::stirling_table(n_max, g.cap);
  const auto f = pick_format(g, "csv", {"json", "csv", "latex"});
  if (f == "json") return dump(fdb::stirling_table_to_json(table));
  if (f == "latex") return fdb::stirling_table_latex(table);
  return fdb::stirling_table_csv(table);
}

std::string run_check(const Globals& g, const std::string& fs, const std::string& gs, const std::string& phis,
                      int n, int s, bool& equal) {
  require_nonnegative(n, "--n");
  require_nonnegative(s, "--s");
  fdb::RationalPolynomial f, gp, phi;
  try {
    f = fdb::RationalPolynomial::parse(fs);
    gp = fdb::RationalPolynomial::parse(gs);
    phi = fdb::RationalPolynomial::parse(phis);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad polynomial: ") + e.what());
  }
  const auto check = fdb::check_main_theorem(f, gp, phi, n, s, g.cap);
  equal = check.equal;
  const auto fmt = pick_format(g, "json", {"json", "pretty"});
  if (fmt == "json") return dump(fdb::theorem_check_to_json(check));
  std::ostringstream out;
  out << "n=" << n << " s=" << s << (check.equal ? " equal" : " DIFFERENT") << "\n";
  out << "direct:    " << check.lhs.to_string() << "\n";
  out << "expansion: " << check.rhs.to_string() << "\n";
  return out.str();
}

std::string run_verify(const Globals& g, fdb::VerifyOptions options, bool& ok) {
  require_nonnegative(options.max_n, "--max-n");
  require_nonnegative(options.max_s, "--max-s");
  if (options.random_triples < 0) throw UsageError("--triples must be non-negative");
  options.seed = g.seed;
  options.cap = g.cap;
  fdb::check_cap(fdb::max_weight_for(options.max_n, options.max_s), g.cap);
  const auto report = fdb::run_verification(options);
  ok = report.passed();
  const auto f = pick_format(g, "json", {"json", "pretty"});
  if (f == "json") return dump(fdb::verify_report_to_json(report));
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << fdb::to_string(r.status) << "  " << r.name << "  (" << r.instances << ")";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Faa di Bruno coefficients, expansions and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--format", g.format, "json, csv, latex or pretty")
      ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
  app.add_option("--seed", g.seed, "seed for random polynomial triples");
  app.add_option("--cap", g.cap, "largest partition weight allowed")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write output to FILE instead of stdout");

  int n = 0, s = 0, n_max = 0;
  bool verify = false;
  std::optional<int> k, r;
  std::string fs, gs, phis;
  fdb::VerifyOptions vopt;

  auto* partitions = app.add_subcommand("partitions", "list the partitions of n");
  partitions->add_option("--n", n)->required();

  auto* coeff = app.add_subcommand("coeff", "coefficient table for (n, s)");
  coeff->add_option("--n", n)->required();
  coeff->add_option("--s", s)->required();
  coeff->add_flag("--verify", verify, "cross-check against the recurrence");

  auto* expand = app.add_subcommand("expand", "n-th derivative expansion for shift s");
  expand->add_option("--n", n)->required();
  expand->add_option("--s", s)->required();
  expand->add_flag("--verify", verify, "compare with the iterated derivation");

  auto* bell = app.add_subcommand("bell", "modified partial (with --k) or complete Bell polynomial");
  bell->add_option("--n", n)->required();
  bell->add_option("--s", s)->required();
  bell->add_option("--k", k);
  bell->add_option("--r", r);

  auto* stirling = app.add_subcommand("stirling", "modified Stirling table S~(n,k,r) for n <= n-max");
  stirling->add_option("--n-max", n_max)->required();

  auto* check = app.add_subcommand("check", "compare the expansion with direct differentiation");
  check->add_option("--f", fs, "coefficients c0,c1,... (p/q allowed)")->required();
  check->add_option("--g", gs)->required();
  check->add_option("--phi", phis)->required();
  check->add_option("--n", n)->required();
  check->add_option("--s", s)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run every identity check");
  verify_cmd->add_option("--max-n", vopt.max_n);
  verify_cmd->add_option("--max-s", vopt.max_s);
  verify_cmd->add_option("--triples", vopt.random_triples);
  verify_cmd->add_option("--max-degree", vopt.max_degree);
  verify_cmd->add_flag("--serial", [&](std::int64_t) { vopt.parallel = false; }, "run suites on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int status = kExitOk;
  std::string output;
  try {
    if (*partitions) {
      output = run_partitions(g, n);
    } else if (*coeff) {
      output = run_coeff(g, n, s, verify);
    } else if (*expand) {
      output = run_expand(g, n, s, verify);
    } else if (*bell) {
      output = run_bell(g, n, s, k, r);
    } else if (*stirling) {
      output = run_stirling(g, n_max);
    } else if (*check) {
      bool equal = false;
      output = run_check(g, fs, gs, phis, n, s, equal);
      if (!equal) status = kExitFailure;
    } else if (*verify_cmd) {
      bool ok = false;
      output = run_verify(g, vopt, ok);
      if (!ok) status = kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "fdb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fdb::CapExceeded& e) {
    std::cerr << "fdb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fdb::VerificationFailure& e) {
    std::cerr << "fdb: verification failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fdb: " << e.what() << "\n";
    return kExitUsage;
  }

  if (g.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      std::cerr << "fdb: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    file << output;
  }
  return status;
}
