#include "fdb/rational_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace fdb {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::identity() { return RationalPolynomial({Rational(0), Rational(1)}); }

RationalPolynomial RationalPolynomial::parse(const std::string& text) {
  if (text.empty() || text.back() == ',') throw std::invalid_argument("empty coefficient in '" + text + "'");
  std::vector<Rational> coeffs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty coefficient in '" + text + "'");
    item = item.substr(first, last - first + 1);
    const auto slash = item.find('/');
    if (slash == std::string::npos) {
      coeffs.emplace_back(parse_decimal(item));
    } else {
      const BigInt den = parse_decimal(item.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in '" + item + "'");
      coeffs.emplace_back(parse_decimal(item.substr(0, slash)), den);
    }
  }
  return RationalPolynomial(std::move(coeffs));
}

Rational RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
  RationalPolynomial out = *this;
  out += other;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const {
  return *this + other * Rational(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c *= scalar;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::compose(const RationalPolynomial& inner) const {
  RationalPolynomial out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out = out * inner + constant(*it);
  }
  return out;
}

RationalPolynomial RationalPolynomial::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  std::vector<Rational> current(coeffs_);
  for (int step = 0; step < order && !current.empty(); ++step) {
    std::vector<Rational> next;
    for (std::size_t k = 1; k < current.size(); ++k) next.push_back(current[k] * static_cast<long long>(k));
    current = std::move(next);
  }
  return RationalPolynomial(std::move(current));
}

RationalPolynomial RationalPolynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  RationalPolynomial out = constant(1);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SymbolEvaluator::SymbolEvaluator(RationalPolynomial f, RationalPolynomial g, RationalPolynomial phi,
                                 RationalPolynomial psi)
    : f_(std::move(f)), g_(std::move(g)), phi_(std::move(phi)), psi_(std::move(psi)) {}

const RationalPolynomial& SymbolEvaluator::f_term(int a) {
  while (static_cast<int>(f_cache_.size()) <= a) {
    f_cache_.push_back(f_.derivative(static_cast<int>(f_cache_.size())).compose(phi_));
  }
  return f_cache_[static_cast<std::size_t>(a)];
}

const RationalPolynomial& SymbolEvaluator::g_term(int b) {
  while (static_cast<int>(g_cache_.size()) <= b) {
    g_cache_.push_back(g_.derivative(static_cast<int>(g_cache_.size())).compose(psi_));
  }
  return g_cache_[static_cast<std::size_t>(b)];
}

const RationalPolynomial& SymbolEvaluator::power_of(std::vector<std::vector<RationalPolynomial>>& cache,
                                                    const RationalPolynomial& base_fn, int i, int e) {
  if (static_cast<int>(cache.size()) <= i) cache.resize(static_cast<std::size_t>(i) + 1);
  auto& row = cache[static_cast<std::size_t>(i)];
  if (row.empty()) row.push_back(RationalPolynomial::constant(1));
  while (static_cast<int>(row.size()) <= e) {
    // Copy first: push_back may reallocate the row.
    RationalPolynomial next = row.back() * base_fn.derivative(i);
    row.push_back(std::move(next));
  }
  return row[static_cast<std::size_t>(e)];
}

RationalPolynomial SymbolEvaluator::evaluate(const DiffPolynomial& p) {
  RationalPolynomial total;
  for (const auto& [monomial, coeff] : p.terms()) {
    // Vanishing factors are common for low-degree inputs; skip them early.
    bool vanishes = false;
    for (const auto& [i, e] : monomial.y.terms()) vanishes = vanishes || i > phi_.degree();
    for (const auto& [i, e] : monomial.z.terms()) vanishes = vanishes || i > psi_.degree();
    if (vanishes) continue;
    RationalPolynomial term = f_term(monomial.f_order);
    if (term.is_zero()) continue;
    term = term * g_term(monomial.g_order);
    for (const auto& [i, e] : monomial.y.terms()) term = term * power_of(phi_powers_, phi_, i, e);
    for (const auto& [i, e] : monomial.z.terms()) term = term * power_of(psi_powers_, psi_, i, e);
    total += term * Rational(coeff);
  }
  return total;
}

RationalPolynomial direct_nth_derivative(const RationalPolynomial& f, const RationalPolynomial& g,
                                         const RationalPolynomial& phi, int n, int s) {
  if (n < 0 || s < 0) throw std::invalid_argument("n and s must be non-negative");
  const RationalPolynomial product = f.compose(phi) * g.compose(phi.derivative(s));
  return product.derivative(n);
}

TheoremCheck check_main_theorem(const RationalPolynomial& f, const RationalPolynomial& g,
                                const RationalPolynomial& phi, int n, int s, int cap) {
  return check_main_theorem(f, g, phi, n, s, formula_expansion(n, s, cap));
}

TheoremCheck check_main_theorem(const RationalPolynomial& f, const RationalPolynomial& g,
                                const RationalPolynomial& phi, int n, int s,
                                const DiffPolynomial& expansion) {
  TheoremCheck check;
  check.n = n;
  check.s = s;
  check.lhs = direct_nth_derivative(f, g, phi, n, s);
  SymbolEvaluator evaluator(f, g, phi, phi.derivative(s));
  check.rhs = evaluator.evaluate(expansion);
  check.difference = check.lhs - check.rhs;
  check.equal = check.difference.is_zero();
  return check;
}

std::int64_t RandomPolynomialSource::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

RationalPolynomial RandomPolynomialSource::next(int max_degree, int height) {
  if (max_degree < 0 || height < 1) throw std::invalid_argument("bad random polynomial bounds");
  const int degree = static_cast<int>(uniform(0, max_degree));
  std::vector<Rational> coeffs;
  for (int k = 0; k <= degree; ++k) {
    std::int64_t num = uniform(-height, height);
    while (k == degree && num == 0) num = uniform(-height, height);
    coeffs.emplace_back(num, uniform(1, height));
  }
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace fdb
