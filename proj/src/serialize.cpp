#include "fdb/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace fdb {

namespace {

std::string join_parts(const Partition& lambda, const char* separator) {
  std::string out;
  for (int p : lambda.parts()) {
    if (!out.empty()) out += separator;
    out += std::to_string(p);
  }
  return out;
}

Json exponents_to_json(const ExponentVector& e) {
  Json out = Json::object();
  for (const auto& [i, exponent] : e.terms()) out[std::to_string(i)] = exponent;
  return out;
}

ExponentVector exponents_from_json(const Json& j) {
  ExponentVector out;
  for (const auto& [key, value] : j.items()) {
    const int exponent = value.get<int>();
    if (exponent <= 0) throw std::invalid_argument("exponents must be positive");
    out.add(std::stoi(key), exponent);
  }
  return out;
}

BigInt coeff_from_json(const Json& j) { return parse_decimal(j.get<std::string>()); }

std::string prime_symbol(const std::string& name, int order) {
  if (order <= 3) return name + std::string(static_cast<std::size_t>(order), '\'');
  return name + "^(" + std::to_string(order) + ")";
}

std::string with_power(const std::string& symbol, int e) {
  return e == 1 ? symbol : symbol + "^" + std::to_string(e);
}

// Shared "c·a·b + ..." layout for pretty output.
template <typename Terms, typename Factors>
std::string pretty_sum(const Terms& terms, Factors factors) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coeff] : terms) {
    std::vector<std::string> parts = factors(monomial);
    const BigInt magnitude = coeff < 0 ? BigInt(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (magnitude != 1 || parts.empty()) body = magnitude.str();
    for (const auto& part : parts) body += (body.empty() ? "" : "·") + part;
    out += body;
  }
  return out;
}

template <typename Terms, typename Factors>
std::string latex_sum(const Terms& terms, Factors factors) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coeff] : terms) {
    const std::string body = factors(monomial);
    const BigInt magnitude = coeff < 0 ? BigInt(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1 || body.empty()) {
      out += magnitude.str();
      if (!body.empty()) out += "\\,";
    }
    out += body;
  }
  return out;
}

std::string latex_power(const std::string& symbol, int e) {
  return e == 1 ? symbol : "\\left(" + symbol + "\\right)^{" + std::to_string(e) + "}";
}

}  // namespace

Json partition_to_json(const Partition& lambda) {
  Json out;
  out["parts"] = lambda.parts();
  return out;
}

Partition partition_from_json(const Json& j) {
  const auto parts = j.at("parts").get<std::vector<int>>();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw std::invalid_argument("parts must be listed in decreasing order");
  }
  return make_partition(parts);
}

Json partitions_to_json(int n, const std::vector<Partition>& partitions) {
  Json out;
  out["n"] = n;
  out["count"] = partitions.size();
  out["partitions"] = Json::array();
  for (const auto& lambda : partitions) out["partitions"].push_back(partition_to_json(lambda));
  return out;
}

std::string partitions_csv(const std::vector<Partition>& partitions) {
  std::string out = "parts\n";
  for (const auto& lambda : partitions) out += join_parts(lambda, " ") + "\n";
  return out;
}

std::string partitions_latex(const std::vector<Partition>& partitions) {
  std::string out = "\\begin{tabular}{rl}\n$\\#$ & $\\lambda$ \\\\\n\\hline\n";
  std::size_t index = 1;
  for (const auto& lambda : partitions) {
    out += std::to_string(index++) + " & $(" + join_parts(lambda, ",") + ")$ \\\\\n";
  }
  return out + "\\end{tabular}\n";
}

std::string partitions_pretty(const std::vector<Partition>& partitions) {
  std::string out;
  for (const auto& lambda : partitions) out += "(" + join_parts(lambda, ",") + ")\n";
  return out;
}

Json coefficient_table_to_json(const CoefficientTable& table) {
  Json out;
  out["n"] = table.n;
  out["s"] = table.s;
  out["entries"] = Json::array();
  for (const auto& entry : table.entries) {
    Json row;
    row["r"] = entry.r;
    row["parts"] = entry.partition.parts();
    row["coeff"] = entry.coeff.str();
    out["entries"].push_back(std::move(row));
  }
  return out;
}

CoefficientTable coefficient_table_from_json(const Json& j) {
  CoefficientTable table;
  table.n = j.at("n").get<int>();
  table.s = j.at("s").get<int>();
  for (const auto& row : j.at("entries")) {
    table.entries.push_back({row.at("r").get<int>(), partition_from_json(row), coeff_from_json(row.at("coeff"))});
  }
  return table;
}

std::string coefficient_table_csv(const CoefficientTable& table) {
  std::string out = "r,parts,coeff\n";
  for (const auto& entry : table.entries) {
    out += std::to_string(entry.r) + "," + join_parts(entry.partition, " ") + "," + entry.coeff.str() + "\n";
  }
  return out;
}

std::string coefficient_table_latex(const CoefficientTable& table) {
  std::ostringstream out;
  out << "% n = " << table.n << ", s = " << table.s << "\n";
  out << "\\begin{tabular}{rlr}\n$r$ & $\\lambda$ & $C_{\\lambda,r}^{(" << table.s << ")}$ \\\\\n\\hline\n";
  for (const auto& entry : table.entries) {
    out << entry.r << " & $(" << join_parts(entry.partition, ",") << ")$ & " << entry.coeff.str() << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string coefficient_table_pretty(const CoefficientTable& table) {
  std::ostringstream out;
  out << "n=" << table.n << " s=" << table.s << " entries=" << table.entries.size() << "\n";
  for (const auto& entry : table.entries) {
    out << "r=" << entry.r << "  (" << join_parts(entry.partition, ",") << ")  " << entry.coeff.str() << "\n";
  }
  return out.str();
}

Json diff_polynomial_to_json(const DiffPolynomial& p) {
  Json out = Json::array();
  for (const auto& [monomial, coeff] : p.terms()) {
    Json term;
    term["f"] = monomial.f_order;
    term["g"] = monomial.g_order;
    term["y"] = exponents_to_json(monomial.y);
    term["z"] = exponents_to_json(monomial.z);
    term["coeff"] = coeff.str();
    out.push_back(std::move(term));
  }
  return out;
}

DiffPolynomial diff_polynomial_from_json(const Json& j) {
  DiffPolynomial p;
  for (const auto& term : j) {
    DiffMonomial monomial;
    monomial.f_order = term.at("f").get<int>();
    monomial.g_order = term.at("g").get<int>();
    monomial.y = exponents_from_json(term.at("y"));
    monomial.z = exponents_from_json(term.at("z"));
    p.add_term(monomial, coeff_from_json(term.at("coeff")));
  }
  return p;
}

std::string diff_polynomial_pretty(const DiffPolynomial& p) {
  return pretty_sum(p.terms(), [](const DiffMonomial& m) {
    std::vector<std::string> factors{prime_symbol("f", m.f_order), prime_symbol("g", m.g_order)};
    for (const auto& [i, e] : m.y.terms()) factors.push_back(with_power(prime_symbol("φ", i), e));
    for (const auto& [i, e] : m.z.terms()) factors.push_back(with_power(prime_symbol("ψ", i), e));
    return factors;
  });
}

std::string diff_polynomial_latex(const DiffPolynomial& p) {
  return latex_sum(p.terms(), [](const DiffMonomial& m) {
    auto symbol = [](const std::string& name, int order) {
      return order == 0 ? name : name + "^{(" + std::to_string(order) + ")}";
    };
    std::string body = "(" + symbol("f", m.f_order) + "\\circ\\varphi)(" + symbol("g", m.g_order) + "\\circ\\psi)";
    for (const auto& [i, e] : m.y.terms()) body += latex_power(symbol("\\varphi", i), e);
    for (const auto& [i, e] : m.z.terms()) body += latex_power(symbol("\\psi", i), e);
    return body;
  });
}

Json ypolynomial_to_json(const YPolynomial& p) {
  Json out = Json::array();
  for (const auto& [exponents, coeff] : p.terms()) {
    Json term;
    term["y"] = exponents_to_json(exponents);
    term["coeff"] = coeff.str();
    out.push_back(std::move(term));
  }
  return out;
}

YPolynomial ypolynomial_from_json(const Json& j) {
  YPolynomial p;
  for (const auto& term : j) p.add_term(exponents_from_json(term.at("y")), coeff_from_json(term.at("coeff")));
  return p;
}

std::string ypolynomial_pretty(const YPolynomial& p) {
  return pretty_sum(p.terms(), [](const ExponentVector& e) {
    std::vector<std::string> factors;
    for (const auto& [i, exponent] : e.terms()) factors.push_back(with_power("y_" + std::to_string(i), exponent));
    return factors;
  });
}

std::string ypolynomial_latex(const YPolynomial& p) {
  return latex_sum(p.terms(), [](const ExponentVector& e) {
    std::string body;
    for (const auto& [i, exponent] : e.terms()) {
      if (!body.empty()) body += " ";
      body += "y_{" + std::to_string(i) + "}";
      if (exponent != 1) body += "^{" + std::to_string(exponent) + "}";
    }
    return body;
  });
}

std::string stirling_table_csv(const StirlingTable& table) {
  std::string out = "n,k,r,value\n";
  for (const auto& e : table.entries) {
    out += std::to_string(e.n) + "," + std::to_string(e.k) + "," + std::to_string(e.r) + "," + e.value.str() + "\n";
  }
  return out;
}

Json stirling_table_to_json(const StirlingTable& table) {
  Json out;
  out["n_max"] = table.n_max;
  out["entries"] = Json::array();
  for (const auto& e : table.entries) {
    Json row;
    row["n"] = e.n;
    row["k"] = e.k;
    row["r"] = e.r;
    row["value"] = e.value.str();
    out["entries"].push_back(std::move(row));
  }
  return out;
}

std::string stirling_table_latex(const StirlingTable& table) {
  std::string out = "\\begin{tabular}{rrrr}\n$n$ & $k$ & $r$ & $\\widetilde{S}(n,k,r)$ \\\\\n\\hline\n";
  for (const auto& e : table.entries) {
    out += std::to_string(e.n) + " & " + std::to_string(e.k) + " & " + std::to_string(e.r) + " & " + e.value.str() +
           " \\\\\n";
  }
  return out + "\\end{tabular}\n";
}

Json rational_polynomial_to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Json theorem_check_to_json(const TheoremCheck& check) {
  Json out;
  out["n"] = check.n;
  out["s"] = check.s;
  out["equal"] = check.equal;
  out["lhs"] = rational_polynomial_to_json(check.lhs);
  out["rhs"] = rational_polynomial_to_json(check.rhs);
  if (!check.equal) out["difference"] = rational_polynomial_to_json(check.difference);
  return out;
}

}  // namespace fdb
