#include "sposet/stanley_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sposet/error.hpp"

namespace sposet {

std::vector<std::string> IdealPresentation::variable_names() const {
  std::vector<std::string> names;
  names.reserve(variables.size());
  for (std::size_t v : variables) names.push_back(poset.label(v).str());
  return names;
}

// The product x_s * x_t is the only positive term; it is printed first.
std::vector<std::string> IdealPresentation::render() const {
  const auto names = variable_names();
  std::vector<std::string> out;
  for (const auto& g : generators) {
    Polynomial positive, negative;
    for (const auto& [m, c] : g.terms()) (c > 0 ? positive : negative).add_term(m, c);
    std::string line = to_string(positive, names);
    for (const auto& [m, c] : negative.ordered_terms()) {
      line += " - " + to_string(Polynomial::term(m, -c), names);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> MonomialIdeal::render() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(to_string(g, variables));
  return out;
}

IdealPresentation stanley_poset_ideal(const Poset& p) {
  if (!is_simplicial(p)) throw PreconditionError("stanley_poset_ideal requires a simplicial poset");
  IdealPresentation ideal{p, {}, {}};
  const std::size_t bottom = p.bottom();
  std::vector<std::size_t> var_of(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == bottom) continue;
    var_of[i] = ideal.variables.size();
    ideal.variables.push_back(i);
  }
  auto x = [&](std::size_t element) { return Monomial::variable(var_of[element]); };

  for (std::size_t s = 0; s < p.size(); ++s) {
    if (s == bottom) continue;
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      if (t == bottom || p.comparable(s, t)) continue;
      Polynomial g = Polynomial::term(x(s) * x(t));
      const auto bounds = minimal_upper_bound_indices(p, s, t);
      if (!bounds.empty()) {
        const std::size_t m = meet_index(p, s, t);
        const Monomial meet_factor = m == bottom ? Monomial{} : x(m);
        for (std::size_t z : bounds) g.add_term(meet_factor * x(z), -1);
      }
      ideal.generators.push_back(std::move(g));
    }
  }
  return ideal;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
  MonomialIdeal ideal{c.vertices(), {}};
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < c.vertices().size(); ++i) index.emplace(c.vertices()[i], i);
  for (const auto& nonface : minimal_nonfaces(c)) {
    Monomial m;
    for (const auto& v : nonface) m = m * Monomial::variable(index.at(v));
    ideal.generators.push_back(std::move(m));
  }
  ideal.generators = minimal_generators(std::move(ideal.generators));
  return ideal;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      redundant = j != i && generators[j].divides(generators[i]);
    }
    if (!redundant) out.push_back(generators[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  return out;
}

MonomialIdeal reduce_face_poset_ideal(const Poset& p) {
  if (!is_face_poset(p)) throw PreconditionError("reduce_face_poset_ideal requires a face poset");
  const IdealPresentation ideal = stanley_poset_ideal(p);

  MonomialIdeal out;
  for (std::size_t a : p.atom_indices()) out.variables.push_back(p.label(a).str());

  std::vector<Monomial> substitution;
  substitution.reserve(ideal.variables.size());
  for (std::size_t v : ideal.variables) {
    Monomial m;
    for_each_bit(p.supports().row(v), [&](std::size_t k) { m = m * Monomial::variable(k); });
    substitution.push_back(std::move(m));
  }

  std::vector<Monomial> survivors;
  for (const auto& g : ideal.generators) {
    Polynomial image;
    for (const auto& [m, c] : g.terms()) {
      Monomial product;
      for (const auto& [var, e] : m.exponents()) {
        for (unsigned k = 0; k < e; ++k) product = product * substitution[var];
      }
      image.add_term(product, c);
    }
    if (image.is_zero()) continue;
    if (image.terms().size() != 1) {
      throw InvariantError("substituted generator is neither zero nor a monomial");
    }
    survivors.push_back(image.terms().begin()->first);
  }
  out.generators = minimal_generators(std::move(survivors));
  return out;
}

bool monomial_ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  const std::set<std::string> va(a.variables.begin(), a.variables.end());
  const std::set<std::string> vb(b.variables.begin(), b.variables.end());
  if (va != vb || va.size() != a.variables.size() || vb.size() != b.variables.size()) {
    throw DomainError("monomial ideals live over different variables");
  }
  std::map<std::string, std::size_t> index_a;
  for (std::size_t i = 0; i < a.variables.size(); ++i) index_a.emplace(a.variables[i], i);
  std::vector<Monomial> b_in_a;
  for (const auto& g : b.generators) {
    Monomial m;
    for (const auto& [v, e] : g.exponents()) {
      m = m * Monomial::variable(index_a.at(b.variables.at(v)), e);
    }
    b_in_a.push_back(std::move(m));
  }
  auto contained = [](const std::vector<Monomial>& gens, const std::vector<Monomial>& in) {
    return std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      return std::any_of(in.begin(), in.end(), [&](const Monomial& h) { return h.divides(g); });
    });
  };
  return contained(a.generators, b_in_a) && contained(b_in_a, a.generators);
}

}  // namespace sposet
