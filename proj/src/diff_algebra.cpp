#include "fdb/diff_algebra.hpp"

#include <stdexcept>

#include "fdb/coefficients.hpp"

namespace fdb {

bool DiffTermOrder::operator()(const DiffMonomial& a, const DiffMonomial& b) const {
  if (a.f_order != b.f_order) return a.f_order > b.f_order;
  if (a.g_order != b.g_order) return a.g_order < b.g_order;
  if (a.y != b.y) return b.y < a.y;
  return b.z < a.z;
}

DiffPolynomial DiffPolynomial::unit() {
  DiffPolynomial p;
  p.add_term(DiffMonomial{}, 1);
  return p;
}

void DiffPolynomial::add_term(const DiffMonomial& monomial, const BigInt& coeff) {
  if (monomial.f_order < 0 || monomial.g_order < 0) throw std::invalid_argument("negative derivative order");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt DiffPolynomial::coefficient(const DiffMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool DiffPolynomial::has_z() const noexcept {
  for (const auto& [monomial, coeff] : terms_) {
    if (!monomial.z.empty()) return true;
  }
  return false;
}

DiffPolynomial DiffPolynomial::operator-(const DiffPolynomial& other) const {
  DiffPolynomial out = *this;
  for (const auto& [monomial, coeff] : other.terms_) out.add_term(monomial, -coeff);
  return out;
}

Derivation Derivation::composed(int s) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  return {Kind::Composed, s};
}

DiffPolynomial derive(const DiffPolynomial& p, Derivation mode) {
  DiffPolynomial out;
  for (const auto& [monomial, coeff] : p.terms()) {
    if (mode.kind == Derivation::Kind::Composed && !monomial.z.empty()) {
      throw std::invalid_argument("psi symbols cannot appear in composed mode");
    }
    {
      DiffMonomial next = monomial;
      ++next.f_order;
      next.y.add(1, 1);
      out.add_term(next, coeff);
    }
    if (mode.kind != Derivation::Kind::ConstantG) {
      DiffMonomial next = monomial;
      ++next.g_order;
      if (mode.kind == Derivation::Kind::Composed) {
        next.y.add(mode.s + 1, 1);
      } else {
        next.z.add(1, 1);
      }
      out.add_term(next, coeff);
    }
    for (const auto& [i, e] : monomial.y.terms()) {
      DiffMonomial next = monomial;
      next.y.add(i, -1);
      next.y.add(i + 1, 1);
      out.add_term(next, coeff * e);
    }
    for (const auto& [i, e] : monomial.z.terms()) {
      DiffMonomial next = monomial;
      next.z.add(i, -1);
      next.z.add(i + 1, 1);
      out.add_term(next, coeff * e);
    }
  }
  return out;
}

DiffPolynomial iterate_derivation(int n, Derivation mode, int cap) {
  if (n < 0) throw std::invalid_argument("derivative order must be non-negative");
  check_cap(mode.kind == Derivation::Kind::Composed ? max_weight_for(n, mode.s) : n, cap);
  DiffPolynomial p = DiffPolynomial::unit();
  for (int step = 0; step < n; ++step) p = derive(p, mode);
  return p;
}

DiffPolynomial nth_derivative_expansion(int n, int s, int cap) {
  return iterate_derivation(n, Derivation::composed(s), cap);
}

DiffPolynomial formula_expansion(int n, int s, int cap) {
  const CoefficientTable table = coefficient_table(n, s, false, cap);
  DiffPolynomial out;
  for (const auto& entry : table.entries) {
    DiffMonomial monomial;
    monomial.f_order = entry.partition.length() - entry.r;
    monomial.g_order = entry.r;
    monomial.y = ExponentVector::from_partition(entry.partition);
    out.add_term(monomial, entry.coeff);
  }
  return out;
}

DiffPolynomial faa_expansion(int n, int cap) {
  DiffPolynomial out;
  for_each_partition(n, [&](const Partition& lambda) {
    DiffMonomial monomial;
    monomial.f_order = lambda.length();
    monomial.y = ExponentVector::from_partition(lambda);
    out.add_term(monomial, faa_di_bruno_coeff(lambda));
  }, cap);
  return out;
}

DiffPolynomial leibniz_product_expansion(int n, int cap) {
  DiffPolynomial out;
  for_each_partition(n, [&](const Partition& rho) {
    const BigInt base = faa_di_bruno_coeff(rho);
    for (int r = 0; r <= rho.length(); ++r) {
      for_each_subpartition(rho, r, [&](const Partition& mu) {
        BigInt coeff = base;
        DiffMonomial monomial;
        monomial.f_order = rho.length() - r;
        monomial.g_order = r;
        for (const auto& [part, mult] : rho.blocks()) {
          const int taken = mu.multiplicity(part);
          coeff *= binomial(mult, taken);
          if (mult > taken) monomial.y.add(part, mult - taken);
          if (taken > 0) monomial.z.add(part, taken);
        }
        out.add_term(monomial, coeff);
      });
    }
  }, cap);
  return out;
}

DiffPolynomial substitute_psi(const DiffPolynomial& p, int s) {
  if (s < 0) throw std::invalid_argument("shift must be non-negative");
  DiffPolynomial out;
  for (const auto& [monomial, coeff] : p.terms()) {
    DiffMonomial next{monomial.f_order, monomial.g_order, monomial.y + monomial.z.shifted(s), {}};
    out.add_term(next, coeff);
  }
  return out;
}

YPolynomial derive(const YPolynomial& p) {
  YPolynomial out;
  for (const auto& [exponents, coeff] : p.terms()) {
    for (const auto& [i, e] : exponents.terms()) {
      ExponentVector next = exponents;
      next.add(i, -1);
      next.add(i + 1, 1);
      out.add_term(next, coeff * e);
    }
  }
  return out;
}

}  // namespace fdb
