#include "fdb/verify.hpp"

#include <functional>
#include <future>
#include <sstream>

#include "fdb/bell.hpp"
#include "fdb/coefficients.hpp"
#include "fdb/diff_algebra.hpp"
#include "fdb/rational_polynomial.hpp"
#include "fdb/symmetric.hpp"

namespace fdb {

const char* to_string(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::Pass:
      return "pass";
    case IdentityStatus::Fail:
      return "fail";
    case IdentityStatus::Informational:
      return "informational";
  }
  return "unknown";
}

bool VerifyReport::passed() const {
  for (const auto& result : results) {
    if (!result.ok()) return false;
  }
  return true;
}

namespace {

std::string show(const Partition& lambda) {
  std::string out = "(";
  for (int p : lambda.parts()) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + ")";
}

std::string show(const std::vector<long long>& values) {
  std::string out = "{";
  for (auto v : values) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

// Counts instances and keeps the first counterexample.
class Tally {
 public:
  Tally(std::string name, std::string statement) {
    result_.name = std::move(name);
    result_.statement = std::move(statement);
  }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.instances;
    if (!ok && result_.status != IdentityStatus::Fail) {
      result_.status = IdentityStatus::Fail;
      result_.detail = describe();
    }
  }

  IdentityResult finish() const { return result_; }

 private:
  IdentityResult result_;
};

// Non-increasing sequences of length <= max_cardinality over [0, max_entry].
void for_each_multiset(int max_cardinality, int max_entry,
                       const std::function<void(const std::vector<long long>&)>& visit) {
  std::vector<long long> current;
  std::function<void(long long)> descend = [&](long long ceiling) {
    visit(current);
    if (static_cast<int>(current.size()) == max_cardinality) return;
    for (long long v = ceiling; v >= 0; --v) {
      current.push_back(v);
      descend(v);
      current.pop_back();
    }
  };
  descend(max_entry);
}

Multiset to_multiset(const std::vector<long long>& values) {
  return Multiset(std::vector<BigInt>(values.begin(), values.end()));
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_weight; ++m) {
    for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
  }
  return out;
}

YPolynomial complete_bell(int n) {
  YPolynomial out;
  for (int k = 0; k <= n; ++k) out += partial_bell(n, k);
  return out;
}

// Stirling triangle from S(n+1,k) = k S(n,k) + S(n,k-1), independent of stirling2().
std::vector<std::vector<BigInt>> triangular_stirling(int n_max) {
  std::vector<std::vector<BigInt>> S(static_cast<std::size_t>(n_max) + 2,
                                     std::vector<BigInt>(static_cast<std::size_t>(n_max) + 2, 0));
  S[0][0] = 1;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) S[n + 1][k] = k * S[n][k] + S[n][k - 1];
  }
  return S;
}

}  // namespace

namespace identities {

IdentityResult partition_modifications(int max_n) {
  Tally tally("partition_modifications",
              "|lambda-e_j| = |lambda|-j, l(lambda-e_j) = l(lambda)-1, |lambda_j| = |lambda|-1, "
              "l(lambda_j) = l(lambda)-[j=1], with the matching multiplicity changes");
  for (int n = 0; n <= max_n; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      tally.check(make_partition(lambda.parts()) == lambda, [&] { return cat("round trip failed for ", show(lambda)); });
      for (const auto& [j, mult] : lambda.blocks()) {
        const Partition removed = remove_part(lambda, j);
        const Partition lowered = decrement_part(lambda, j);
        bool ok = removed.weight() == lambda.weight() - j && removed.length() == lambda.length() - 1 &&
                  lowered.weight() == lambda.weight() - 1 && lowered.length() == lambda.length() - (j == 1 ? 1 : 0);
        for (int i = 1; i <= n + 1; ++i) {
          ok = ok && removed.multiplicity(i) == lambda.multiplicity(i) - (i == j ? 1 : 0);
          int expected = lambda.multiplicity(i);
          if (i == j) expected -= 1;
          if (i == j - 1) expected += 1;
          ok = ok && lowered.multiplicity(i) == expected;
        }
        if (j == 1) ok = ok && removed == lowered;
        tally.check(ok, [&] { return cat("lambda=", show(lambda), " j=", j); });
      }
    });
  }
  return tally.finish();
}

IdentityResult union_and_shift(int max_weight, int max_s) {
  Tally tally("union_and_shift",
              "m_i(mu u nu) = m_i(mu)+m_i(nu); l(mu^{+s}) = l(mu), |mu^{+s}| = |mu|+s l(mu), "
              "m_i(mu^{+s}) = m_{i-s}(mu); mu^{+s} is its own s-truncation");
  const auto all = partitions_up_to(max_weight);
  for (const auto& mu : all) {
    for (const auto& nu : all) {
      if (mu.weight() + nu.weight() > max_weight) continue;
      const Partition u = partition_union(mu, nu);
      bool ok = u.weight() == mu.weight() + nu.weight() && u.length() == mu.length() + nu.length();
      for (int i = 1; i <= max_weight; ++i) ok = ok && u.multiplicity(i) == mu.multiplicity(i) + nu.multiplicity(i);
      tally.check(ok, [&] { return cat("union of ", show(mu), " and ", show(nu)); });
    }
    for (int s = 0; s <= max_s; ++s) {
      const Partition up = shift_up(mu, s);
      bool ok = up.length() == mu.length() && up.weight() == mu.weight() + s * mu.length() &&
                truncate_above(up, s) == up && shift_down(up, s) == mu;
      for (int i = 1; i <= max_weight + s; ++i) {
        ok = ok && up.multiplicity(i) == (i > s ? mu.multiplicity(i - s) : 0);
      }
      const bool has_small = !mu.empty() && mu.blocks().back().first <= s;
      ok = ok && ((truncate_above(mu, s) == mu) == !has_small);
      tally.check(ok, [&] { return cat("shift of ", show(mu), " by ", s); });
    }
  }
  return tally.finish();
}

IdentityResult newton_identity(int max_cardinality, int max_entry) {
  Tally tally("newton_identity",
              "sum_{k=1}^{r} (-1)^{k-1} p_k e_{r-k} = r e_r, and e_r = 0 above the cardinality");
  const int R = std::max(max_cardinality, 1);
  for_each_multiset(max_cardinality, max_entry, [&](const std::vector<long long>& values) {
    const Multiset b = to_multiset(values);
    for (int r = 1; r <= R; ++r) {
      tally.check(newton_residual(b, r) == 0, [&] { return cat("b=", show(values), " r=", r); });
    }
    const ElementaryVector e = elementary_moments(b, R + 1);
    bool vanish = true;
    for (int r = static_cast<int>(b.cardinality()) + 1; r <= R + 1; ++r) vanish = vanish && e[r] == 0;
    tally.check(vanish, [&] { return cat("e_r above cardinality nonzero for b=", show(values)); });
  });
  return tally.finish();
}

IdentityResult subtract_transform_consistency(int max_cardinality, int max_entry) {
  Tally tally("subtract_transform",
              "replacing b_l by b_l - c maps e_r to e_r - c sum_{k=1}^{r} (-b_l)^{k-1} e_{r-k}");
  const int R = max_cardinality;
  for_each_multiset(max_cardinality, max_entry, [&](const std::vector<long long>& values) {
    const Multiset b = to_multiset(values);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0 && values[i] == values[i - 1]) continue;
      const BigInt v = values[i];
      tally.check(subtract_transform(b, v, v, R) == elementary_moments(b.without_one(v), R),
                  [&] { return cat("omit ", values[i], " from ", show(values)); });
      if (values[i] >= 1) {
        std::vector<long long> lowered = values;
        lowered[i] -= 1;
        tally.check(subtract_transform(b, v, 1, R) == elementary_moments(to_multiset(lowered), R),
                    [&] { return cat("lower ", values[i], " in ", show(values)); });
      }
    }
  });
  return tally.finish();
}

IdentityResult subpartition_elementary(int max_weight, int max_s) {
  Tally tally("subpartition_elementary",
              "e_r((eta)_s) = sum_{l(nu)=r} prod binom(m_i(eta), m_i(nu)) prod (i)_s^{m_i(nu)}");
  for (const auto& eta : partitions_up_to(max_weight)) {
    for (int s = 0; s <= max_s; ++s) {
      if (s >= 1 && !eta.empty() && eta.blocks().back().first <= s) continue;
      const ElementaryVector e = elementary_moments(pochhammer_map(eta, s), eta.length() + 1);
      for (int r = 0; r <= eta.length() + 1; ++r) {
        tally.check(elementary_by_subpartitions(eta, s, r) == e[r],
                    [&] { return cat("eta=", show(eta), " s=", s, " r=", r); });
      }
    }
  }
  return tally.finish();
}

IdentityResult shifted_subpartition_elementary(int max_weight, int max_s) {
  Tally tally("shifted_subpartition_elementary",
              "e_r((lambda^{>s})_s) = sum_{l(mu)=r} prod_{i>s} binom(m_i(lambda), m_{i-s}(mu)) "
              "prod ((i+s)!/i!)^{m_i(mu)}");
  for (const auto& lambda : partitions_up_to(max_weight)) {
    for (int s = 0; s <= max_s; ++s) {
      const Partition top = truncate_above(lambda, s);
      const ElementaryVector e = elementary_moments(pochhammer_map(top, s), top.length() + 1);
      for (int r = 0; r <= top.length() + 1; ++r) {
        tally.check(elementary_by_shifted_subpartitions(lambda, s, r) == e[r],
                    [&] { return cat("lambda=", show(lambda), " s=", s, " r=", r); });
      }
    }
  }
  return tally.finish();
}

IdentityResult binomial_length(int max_n) {
  Tally tally("binomial_length",
              "C^{(0)}_{lambda,r} = binom(l(lambda), r) C_{lambda,0} and "
              "binom(l(lambda), r) = sum_{l(mu)=r} prod binom(m_i(lambda), m_i(mu))");
  for (int n = 0; n <= max_n; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      const BigInt base = c_coeff(lambda, 0, 0);
      for (int r = 0; r <= lambda.length(); ++r) {
        tally.check(c_coeff(lambda, r, 0) == binomial(lambda.length(), r) * base,
                    [&] { return cat("lambda=", show(lambda), " r=", r); });
        tally.check(elementary_by_subpartitions(lambda, 0, r) == binomial(lambda.length(), r),
                    [&] { return cat("ball count for lambda=", show(lambda), " r=", r); });
      }
    });
  }
  return tally.finish();
}

IdentityResult zero_r_reduction(int max_n, int max_s) {
  Tally tally("zero_r_reduction", "C^{(s)}_{lambda,0} = |lambda|! / prod (i!)^{m_i} m_i! for every s");
  for (int n = 0; n <= max_n; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      const BigInt expected = faa_di_bruno_coeff(lambda);
      for (int s = 0; s <= max_s; ++s) {
        tally.check(c_coeff(lambda, 0, s) == expected, [&] { return cat("lambda=", show(lambda), " s=", s); });
      }
    });
  }
  return tally.finish();
}

IdentityResult integrality(int max_n, int max_s) {
  Tally tally("integrality", "every C^{(s)}_{lambda,r} in range reduces to a positive integer");
  for (int s = 0; s <= max_s; ++s) {
    for (int n = 0; n <= max_n; ++n) {
      for (int r = 0; r <= n; ++r) {
        for_each_constrained(n, r, s, [&](const Partition& lambda) {
          const Rational value = c_coeff_fraction(lambda, r, s);
          tally.check(boost::multiprecision::denominator(value) == 1 && value > 0,
                      [&] { return cat("lambda=", show(lambda), " r=", r, " s=", s, " value=", value.str()); });
        });
      }
    }
  }
  return tally.finish();
}

IdentityResult s1_integrality(int max_n) {
  Tally tally("s1_integrality", "n! e_r(lambda^{>1}) / prod j!^{m_j} m_j! is an integer for lambda |- n + r");
  for (int n = 0; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      for_each_partition(n + r, [&](const Partition& lambda) {
        std::vector<BigInt> parts;
        for (int p : truncate_above(lambda, 1).parts()) parts.emplace_back(p);
        const ElementaryVector e = elementary_moments(Multiset(std::move(parts)), r);
        BigInt denominator = 1;
        for (const auto& [part, mult] : lambda.blocks()) denominator *= power(factorial(part), mult) * factorial(mult);
        tally.check((factorial(n) * e[r]) % denominator == 0,
                    [&] { return cat("lambda=", show(lambda), " n=", n, " r=", r); });
      });
    }
  }
  return tally.finish();
}

IdentityResult recurrence_closed_form(int max_n, int max_s) {
  Tally tally("recurrence_closed_form",
              "C_{lambda,r} = sum_j (m_{j-1}+1)[m_j>0] C_{lambda_j,r} + [r>0][m_{s+1}>0] C_{lambda-e_{s+1},r-1}");
  for (int s = 0; s <= max_s; ++s) {
    CoefficientRecurrence recurrence(s);
    for (int n = 0; n <= max_n; ++n) {
      for (int r = 0; r <= n; ++r) {
        // All partitions of n + r s, so the vanishing entries are covered too.
        for_each_partition(n + r * s, [&](const Partition& lambda) {
          tally.check(recurrence(lambda, r) == c_coeff(lambda, r, s),
                      [&] { return cat("lambda=", show(lambda), " r=", r, " s=", s); });
        });
      }
    }
  }
  return tally.finish();
}

IdentityResult main_theorem_oracle(int max_n, int max_s, int cap) {
  Tally tally("main_theorem_oracle",
              "n-fold Leibniz derivation of F_0 G_0 equals the closed-form expansion over (r, lambda)");
  for (int s = 0; s <= max_s; ++s) {
    check_cap(max_weight_for(max_n, s), cap);
    DiffPolynomial oracle = DiffPolynomial::unit();
    for (int n = 0; n <= max_n; ++n) {
      if (n > 0) oracle = derive(oracle, Derivation::composed(s));
      const DiffPolynomial formula = formula_expansion(n, s, cap);
      tally.check(formula == oracle, [&] {
        return cat("n=", n, " s=", s, ": ", (oracle - formula).size(), " monomials differ");
      });
    }
  }
  return tally.finish();
}

IdentityResult weighted_degree_law(int max_n, int max_s) {
  Tally tally("weighted_degree_law", "every monomial has sum i y_i = n + g s, f + g = sum y_i, f >= 0");
  for (int s = 0; s <= max_s; ++s) {
    for (int n = 0; n <= max_n; ++n) {
      const DiffPolynomial expansion = formula_expansion(n, s);
      for (const auto& [m, coeff] : expansion.terms()) {
        tally.check(m.f_order >= 0 && m.y.weighted_degree() == n + m.g_order * s &&
                        m.f_order + m.g_order == m.y.degree() && m.z.empty(),
                    [&] { return cat("n=", n, " s=", s, " f=", m.f_order, " g=", m.g_order); });
      }
    }
  }
  return tally.finish();
}

IdentityResult faa_di_bruno_oracle(int max_n) {
  Tally tally("faa_di_bruno_oracle", "(f o phi)^(n) = sum_{lambda |- n} n!/prod (i!)^{m_i} m_i! f^(l) prod phi^(i)^{m_i}");
  DiffPolynomial oracle = DiffPolynomial::unit();
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) oracle = derive(oracle, Derivation::constant_g());
    tally.check(faa_expansion(n) == oracle, [&] { return cat("n=", n); });
  }
  return tally.finish();
}

IdentityResult leibniz_product_oracle(int max_n) {
  Tally tally("leibniz_product_oracle",
              "n-th derivative of (f o phi)(g o psi) equals the sum over rho |- n, r, mu <= rho");
  DiffPolynomial oracle = DiffPolynomial::unit();
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) oracle = derive(oracle, Derivation::independent());
    tally.check(leibniz_product_expansion(n) == oracle, [&] { return cat("n=", n); });
  }
  return tally.finish();
}

IdentityResult psi_substitution_bridge(int max_n, int max_s) {
  Tally tally("psi_substitution_bridge", "the psi-expansion with psi = phi^(s) equals the composed derivative");
  for (int s = 0; s <= max_s; ++s) {
    DiffPolynomial oracle = DiffPolynomial::unit();
    for (int n = 0; n <= max_n; ++n) {
      if (n > 0) oracle = derive(oracle, Derivation::composed(s));
      tally.check(substitute_psi(leibniz_product_expansion(n), s) == oracle,
                  [&] { return cat("n=", n, " s=", s); });
    }
  }
  return tally.finish();
}

IdentityResult concrete_polynomials(int max_n, int max_s, std::uint64_t seed, int triples, int max_degree,
                                    int height) {
  Tally tally("concrete_polynomials",
              "d^n/dt^n [(f o phi)(g o phi^(s))] equals the expansion evaluated on random rational polynomials");
  std::vector<std::vector<DiffPolynomial>> expansions(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= max_s; ++s) expansions[n].push_back(formula_expansion(n, s));
  }
  RandomPolynomialSource source(seed);
  for (int t = 0; t < triples; ++t) {
    const RationalPolynomial f = source.next(max_degree, height);
    const RationalPolynomial g = source.next(max_degree, height);
    const RationalPolynomial phi = source.next(max_degree, height);
    for (int n = 0; n <= max_n; ++n) {
      for (int s = 0; s <= max_s; ++s) {
        const TheoremCheck check = check_main_theorem(f, g, phi, n, s, expansions[n][s]);
        tally.check(check.equal, [&] {
          return cat("triple ", t, " n=", n, " s=", s, " f=", f.to_string(), " g=", g.to_string(),
                     " phi=", phi.to_string());
        });
      }
    }
  }
  return tally.finish();
}

IdentityResult concrete_constant_g(int max_n, std::uint64_t seed, int triples, int max_degree, int height) {
  Tally tally("concrete_constant_g", "with g constant the derivative is g times the Faa di Bruno sum");
  RandomPolynomialSource source(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<DiffPolynomial> expansions;
  for (int n = 0; n <= max_n; ++n) expansions.push_back(faa_expansion(n));
  for (int t = 0; t < triples; ++t) {
    const RationalPolynomial f = source.next(max_degree, height);
    const RationalPolynomial phi = source.next(max_degree, height);
    const RationalPolynomial g = source.next(0, height);
    SymbolEvaluator evaluator(f, g, phi, phi.derivative(1));
    for (int n = 0; n <= max_n; ++n) {
      tally.check(direct_nth_derivative(f, g, phi, n, 1) == evaluator.evaluate(expansions[n]),
                  [&] { return cat("triple ", t, " n=", n); });
    }
  }
  return tally.finish();
}

IdentityResult concrete_s0_product(int max_n, std::uint64_t seed, int triples, int max_degree, int height) {
  Tally tally("concrete_s0_product", "for s = 0 the expansion is the n-th derivative of (f g) o phi");
  RandomPolynomialSource source(seed ^ 0xc2b2ae3d27d4eb4fULL);
  std::vector<DiffPolynomial> expansions;
  for (int n = 0; n <= max_n; ++n) expansions.push_back(formula_expansion(n, 0));
  for (int t = 0; t < triples; ++t) {
    const RationalPolynomial f = source.next(max_degree, height);
    const RationalPolynomial g = source.next(max_degree, height);
    const RationalPolynomial phi = source.next(max_degree, height);
    const RationalPolynomial product = (f * g).compose(phi);
    for (int n = 0; n <= max_n; ++n) {
      tally.check(check_main_theorem(f, g, phi, n, 0, expansions[n]).rhs == product.derivative(n),
                  [&] { return cat("triple ", t, " n=", n); });
    }
  }
  return tally.finish();
}

IdentityResult modified_bell_r0(int max_n, int max_s) {
  Tally tally("modified_bell_r0", "the r = 0 modified partial Bell polynomial is B_{n,k}");
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const YPolynomial classical = partial_bell(n, k);
      for (int s = 0; s <= max_s; ++s) {
        tally.check(modified_partial_bell(n, k, 0, s) == classical,
                    [&] { return cat("n=", n, " k=", k, " s=", s); });
      }
    }
  }
  return tally.finish();
}

IdentityResult bell_homogeneity(int max_n, int max_s) {
  Tally tally("bell_homogeneity", "modified partial Bell terms have degree k and weighted degree n + r s");
  for (int s = 0; s <= max_s; ++s) {
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int r = 0; r <= k; ++r) {
          const YPolynomial bell = modified_partial_bell(n, k, r, s);
          for (const auto& [e, coeff] : bell.terms()) {
            tally.check(e.degree() == k && e.weighted_degree() == n + r * s,
                        [&] { return cat("n=", n, " k=", k, " r=", r, " s=", s); });
          }
        }
      }
    }
  }
  return tally.finish();
}

IdentityResult bell_variable_absence(int max_n, int max_s) {
  Tally tally("bell_variable_absence", "for s > n+2-k the variables y_i with n+1-k < i <= s do not occur");
  for (int s = 0; s <= max_s; ++s) {
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (s <= n + 2 - k) continue;
        for (int r = 0; r <= k; ++r) {
          bool absent = true;
          const YPolynomial bell = modified_partial_bell(n, k, r, s);
          for (const auto& [e, coeff] : bell.terms()) {
            for (int i = n + 2 - k; i <= s; ++i) absent = absent && e.get(i) == 0;
          }
          tally.check(absent, [&] { return cat("n=", n, " k=", k, " r=", r, " s=", s); });
        }
      }
    }
  }
  return tally.finish();
}

IdentityResult bell_product_form(int max_n, int max_s) {
  Tally tally("bell_product_form",
              "modified partial Bell = sum_p binom(n,p) B_{n-p,k-r}(y_1,..) B_{p,r}(y_{s+1},..); "
              "complete form = sum_p binom(n,p) B_{n-p} B_p(shifted)");
  for (int s = 0; s <= max_s; ++s) {
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int r = 0; r <= k; ++r) {
          tally.check(product_form_partial(n, k, r, s) == modified_partial_bell(n, k, r, s),
                      [&] { return cat("n=", n, " k=", k, " r=", r, " s=", s); });
        }
      }
      YPolynomial complete;
      for (int p = 0; p <= n; ++p) complete += (complete_bell(n - p) * complete_bell(p).shifted(s)) * binomial(n, p);
      tally.check(complete == modified_complete_bell(n, s), [&] { return cat("complete n=", n, " s=", s); });
    }
  }
  return tally.finish();
}

IdentityResult bell_y_recurrence(int max_n, int max_s) {
  Tally tally("bell_y_recurrence",
              "B~_{n+1,k+1,r} = sum_l binom(n,l) y_{l+1} B~_{n-l,k,r} + sum_l binom(n,l) y_{l+s+1} B~_{n-l,k,r-1}");
  for (int s = 0; s <= max_s; ++s) {
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int r = 0; r <= k + 1; ++r) {
          YPolynomial rhs;
          for (int l = 0; l <= n - k; ++l) {
            rhs += (YPolynomial::variable(l + 1) * modified_partial_bell(n - l, k, r, s)) * binomial(n, l);
            if (r >= 1) {
              rhs += (YPolynomial::variable(l + s + 1) * modified_partial_bell(n - l, k, r - 1, s)) * binomial(n, l);
            }
          }
          tally.check(modified_partial_bell(n + 1, k + 1, r, s) == rhs,
                      [&] { return cat("n=", n, " k=", k, " r=", r, " s=", s); });
        }
      }
    }
  }
  return tally.finish();
}

IdentityResult stirling_classical(int max_n) {
  Tally tally("stirling_classical",
              "S(n+1,k+1) = sum_l binom(n,l) S(n-l,k) agrees with S(n+1,k) = k S(n,k) + S(n,k-1); S~(n,k,0) = S(n,k)");
  const auto triangular = triangular_stirling(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      tally.check(stirling2(n, k) == triangular[n][k] && modified_stirling(n, k, 0) == stirling2(n, k),
                  [&] { return cat("n=", n, " k=", k); });
    }
  }
  return tally.finish();
}

IdentityResult stirling_s_independence(int max_n, int max_s) {
  Tally tally("stirling_s_independence",
              "y_i -> c^i x sends B~^{(s)}_{n,k,r} to S~(n,k,r) c^{n+rs} x^k with S~ independent of s");
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) {
        const BigInt expected = modified_stirling(n, k, r);
        for (int s = 0; s <= max_s; ++s) {
          const auto image = geometric_substitution(modified_partial_bell(n, k, r, s));
          bool ok;
          if (expected == 0) {
            ok = image.empty();
          } else {
            ok = image.size() == 1 && image.begin()->first == std::make_pair(n + r * s, k) &&
                 image.begin()->second == expected;
          }
          tally.check(ok, [&] { return cat("n=", n, " k=", k, " r=", r, " s=", s); });
        }
      }
    }
  }
  return tally.finish();
}

IdentityResult stirling_convolution_identity(int max_n) {
  Tally tally("stirling_convolution", "S~(n,k,r) = sum_{p=r}^{n-k+r} binom(n,p) S(n-p,k-r) S(p,r)");
  const StirlingTable table = stirling_table(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) {
        tally.check(stirling_convolution(n, k, r) == table.at(n, k, r),
                    [&] { return cat("n=", n, " k=", k, " r=", r); });
      }
    }
  }
  return tally.finish();
}

IdentityResult stirling_recurrence_identity(int max_n) {
  Tally tally("stirling_recurrence",
              "S~(n+1,k+1,r) = sum_{l=0}^{n-k} binom(n,l) (S~(n-l,k,r) + S~(n-l,k,r-1))");
  const StirlingTable table = stirling_table(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k + 1; ++r) {
        BigInt rhs = 0;
        for (int l = 0; l <= n - k; ++l) rhs += binomial(n, l) * (table.at(n - l, k, r) + table.at(n - l, k, r - 1));
        tally.check(table.at(n + 1, k + 1, r) == rhs && rhs == modified_stirling_step(n, k, r),
                    [&] { return cat("n=", n, " k=", k, " r=", r); });
      }
    }
  }
  return tally.finish();
}

IdentityResult stirling_row_sum(int max_n) {
  Tally tally("stirling_row_sum", "sum_{r=0}^{k} S~(n,k,r) = 2^k S(n,k)");
  const StirlingTable table = stirling_table(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt total = 0;
      for (int r = 0; r <= k; ++r) total += table.at(n, k, r);
      tally.check(total == power(2, k) * stirling2(n, k), [&] { return cat("n=", n, " k=", k); });
    }
  }
  return tally.finish();
}

IdentityResult touchard_binomial_type(int max_n) {
  Tally tally("touchard_binomial_type", "sum_p binom(n,p) T_{n-p}(x) T_p(y) = T_n(x+y)");
  for (int n = 0; n <= max_n; ++n) {
    // Coefficient grids indexed [power of x][power of y].
    std::vector<std::vector<BigInt>> lhs(n + 1, std::vector<BigInt>(n + 1, 0));
    std::vector<std::vector<BigInt>> rhs = lhs;
    for (int p = 0; p <= n; ++p) {
      const auto tx = touchard(n - p);
      const auto ty = touchard(p);
      for (int a = 0; a <= n - p; ++a) {
        for (int b = 0; b <= p; ++b) lhs[a][b] += binomial(n, p) * tx[a] * ty[b];
      }
    }
    const auto tn = touchard(n);
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= k; ++j) rhs[j][k - j] += tn[k] * binomial(k, j);
    }
    tally.check(lhs == rhs, [&] { return cat("n=", n); });
  }
  return tally.finish();
}

IdentityResult convolution_without_binomial(int max_n) {
  IdentityResult result;
  result.name = "convolution_without_binomial";
  result.statement = "S~(n,k,r) = sum_p S(n-p,k-r) S(p,r) (binom(n,p) omitted)";
  result.status = IdentityStatus::Informational;
  const StirlingTable table = stirling_table(max_n);
  long long differing = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) {
        ++result.instances;
        const BigInt printed = stirling_convolution_without_binomial(n, k, r);
        const BigInt actual = table.at(n, k, r);
        if (printed == actual) continue;
        if (differing++ == 0) {
          result.detail = cat("first counterexample (n,k,r)=(", n, ",", k, ",", r, "): form gives ", printed.str(),
                              ", definition gives ", actual.str());
        }
      }
    }
  }
  result.detail = differing == 0 ? "no discrepancy in range"
                                 : cat(result.detail, "; ", differing, " of ", result.instances, " cells differ");
  return result;
}

IdentityResult unshifted_stirling_recurrence(int max_n) {
  IdentityResult result;
  result.name = "unshifted_stirling_recurrence";
  result.statement = "S~(n+1,k+1,r) = sum_{l=0}^{n-k} binom(n,l) (S~(n,k,r) + S~(n,k,r-1))";
  result.status = IdentityStatus::Informational;
  const StirlingTable table = stirling_table(max_n + 1);
  long long differing = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k + 1; ++r) {
        ++result.instances;
        const BigInt printed = modified_stirling_step_unshifted(n, k, r);
        const BigInt actual = table.at(n + 1, k + 1, r);
        if (printed == actual) continue;
        if (differing++ == 0) {
          result.detail = cat("first counterexample (n,k,r)=(", n, ",", k, ",", r, "): form gives ", printed.str(),
                              ", S~(n+1,k+1,r) = ", actual.str());
        }
      }
    }
  }
  result.detail = differing == 0 ? "no discrepancy in range"
                                 : cat(result.detail, "; ", differing, " of ", result.instances, " cells differ");
  return result;
}

}  // namespace identities

VerifyReport run_verification(const VerifyOptions& o) {
  namespace id = identities;
  const int n = o.max_n;
  const int s = o.max_s;
  const int card = std::min(o.max_n, o.multiset_cardinality);
  std::vector<std::function<IdentityResult()>> suites = {
      [=] { return id::partition_modifications(n); },
      [=] { return id::union_and_shift(n, s); },
      [=] { return id::newton_identity(card, o.multiset_entry_max); },
      [=] { return id::subtract_transform_consistency(card, o.multiset_entry_max); },
      [=] { return id::subpartition_elementary(n, s); },
      [=] { return id::shifted_subpartition_elementary(n, s); },
      [=] { return id::binomial_length(n); },
      [=] { return id::zero_r_reduction(n, s); },
      [=] { return id::integrality(n, s); },
      [=] { return id::s1_integrality(n); },
      [=] { return id::recurrence_closed_form(n, s); },
      [=] { return id::main_theorem_oracle(n, s, o.cap); },
      [=] { return id::weighted_degree_law(n, s); },
      [=] { return id::faa_di_bruno_oracle(n); },
      [=] { return id::leibniz_product_oracle(n); },
      [=] { return id::psi_substitution_bridge(n, s); },
      [=] { return id::concrete_polynomials(n, s, o.seed, o.random_triples, o.max_degree, o.height); },
      [=] { return id::concrete_constant_g(n, o.seed, o.random_triples, o.max_degree, o.height); },
      [=] { return id::concrete_s0_product(n, o.seed, o.random_triples, o.max_degree, o.height); },
      [=] { return id::modified_bell_r0(n, s); },
      [=] { return id::bell_homogeneity(n, s); },
      // vacuous unless s > n + 2 - k, so s runs past max_s here
      [=] { return id::bell_variable_absence(n, std::max(s, n + 2)); },
      [=] { return id::bell_product_form(n, s); },
      [=] { return id::bell_y_recurrence(n, s); },
      [=] { return id::stirling_classical(n); },
      [=] { return id::stirling_s_independence(n, s); },
      [=] { return id::stirling_convolution_identity(n); },
      [=] { return id::stirling_recurrence_identity(n); },
      [=] { return id::stirling_row_sum(n); },
      [=] { return id::touchard_binomial_type(n); },
      [=] { return id::convolution_without_binomial(n); },
      [=] { return id::unshifted_stirling_recurrence(n); },
  };

  VerifyReport report{o, {}};
  if (o.parallel) {
    std::vector<std::future<IdentityResult>> pending;
    for (auto& suite : suites) pending.push_back(std::async(std::launch::async, suite));
    for (auto& f : pending) report.results.push_back(f.get());
  } else {
    for (auto& suite : suites) report.results.push_back(suite());
  }
  return report;
}

Json verify_report_to_json(const VerifyReport& report) {
  Json out;
  out["seed"] = report.options.seed;
  out["max_n"] = report.options.max_n;
  out["max_s"] = report.options.max_s;
  out["random_triples"] = report.options.random_triples;
  out["identities"] = Json::array();
  long long passed = 0, failed = 0, informational = 0;
  for (const auto& r : report.results) {
    Json entry;
    entry["name"] = r.name;
    entry["statement"] = r.statement;
    entry["status"] = to_string(r.status);
    entry["instances"] = r.instances;
    entry["detail"] = r.detail;
    out["identities"].push_back(std::move(entry));
    switch (r.status) {
      case IdentityStatus::Pass:
        ++passed;
        break;
      case IdentityStatus::Fail:
        ++failed;
        break;
      case IdentityStatus::Informational:
        ++informational;
        break;
    }
  }
  out["summary"] = {{"passed", passed}, {"failed", failed}, {"informational", informational}};
  out["ok"] = report.passed();
  return out;
}

}  // namespace fdb
