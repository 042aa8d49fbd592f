#include "sposet/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "sposet/error.hpp"

namespace sposet {

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.exponents_[index] = exponent;
  return m;
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [v, e] : exponents_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [v, e] : other.exponents_) out.exponents_[v] += e;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : exponents_) {
    auto it = other.exponents_.find(v);
    if (it == other.exponents_.end() || it->second < e) return false;
  }
  return true;
}

Polynomial Polynomial::constant(Coefficient c) { return term(Monomial{}, c); }

Polynomial Polynomial::term(Monomial m, Coefficient c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Monomial, Polynomial::Coefficient>> Polynomial::ordered_terms() const {
  std::vector<std::pair<Monomial, Coefficient>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first.degree(), db = b.first.degree();
    if (da != db) return da > db;
    // Graded lexicographic: a larger exponent on a lower index comes first.
    auto ia = a.first.exponents().begin(), ea = a.first.exponents().end();
    auto ib = b.first.exponents().begin(), eb = b.first.exponents().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second > ib->second;
    }
    return ia != ea && ib == eb;
  });
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    if (!out.empty()) out += '*';
    out += "x[" + names.at(v) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.ordered_terms()) {
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const auto magnitude = c < 0 ? -c : c;
    if (m.is_one()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + "*";
      out += to_string(m, names);
    }
    first = false;
  }
  return out;
}

nlohmann::json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& names) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.ordered_terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : m.exponents()) mono[names.at(v)] = e;
    terms.push_back({{"coefficient", c}, {"monomial", std::move(mono)}});
  }
  return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j, const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  Polynomial p;
  try {
    for (const auto& t : j.at("terms")) {
      Monomial m;
      for (const auto& [name, e] : t.at("monomial").items()) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("unknown variable '" + name + "'");
        m = m * Monomial::variable(it->second, e.get<unsigned>());
      }
      p.add_term(m, t.at("coefficient").get<Polynomial::Coefficient>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

}  // namespace sposet
