#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sposet {

// Sparse monomial: variable index -> positive exponent.
class Monomial {
 public:
  Monomial() = default;  // the constant monomial 1

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  const std::map<std::size_t, unsigned>& exponents() const noexcept { return exponents_; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept { return exponents_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::map<std::size_t, unsigned> exponents_;
};

// Sparse polynomial with integer coefficients.  Zero coefficients are never
// stored.
class Polynomial {
 public:
  using Coefficient = std::int64_t;

  Polynomial() = default;
  static Polynomial constant(Coefficient c);
  static Polynomial term(Monomial m, Coefficient c = 1);

  void add_term(const Monomial& m, Coefficient c);

  const std::map<Monomial, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Printing order: graded lexicographic with x0 > x1 > ...
  std::vector<std::pair<Monomial, Coefficient>> ordered_terms() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Coefficient> terms_;
};

// Variables print as x[<name>]; e.g. "x[x]*x[y] - x[l1] - x[l2]".
std::string to_string(const Monomial& m, const std::vector<std::string>& names);
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

// {"terms": [{"coefficient": c, "monomial": {"<name>": exponent, ...}}, ...]}
nlohmann::json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& names);
Polynomial polynomial_from_json(const nlohmann::json& j, const std::vector<std::string>& names);

}  // namespace sposet
