#pragma once

#include <string>
#include <vector>

#include "sposet/polynomial.hpp"
#include "sposet/poset.hpp"
#include "sposet/simplicial_complex.hpp"

namespace sposet {

// Generators of the relation ideal of Stanley's ring A_P, one variable per
// non-Bottom element.  Variable k is element variables[k] of poset.
struct IdealPresentation {
  Poset poset;
  std::vector<std::size_t> variables;
  std::vector<Polynomial> generators;

  std::vector<std::string> variable_names() const;
  // One rendered generator per entry, e.g. "x[a]*x[b] - x[a*b]".
  std::vector<std::string> render() const;
};

// For every unordered incomparable pair {s, t} of non-Bottom elements:
//   no common upper bound:  x_s * x_t
//   otherwise:              x_s * x_t - x_(s meet t) * sum of x_z over the
//                           minimal upper bounds z
// where x_Bottom = 1.  Pairs come in canonical label order.
IdealPresentation stanley_poset_ideal(const Poset& p);

// Monomial generators over named variables.
struct MonomialIdeal {
  std::vector<std::string> variables;
  std::vector<Monomial> generators;

  std::vector<std::string> render() const;
};

// Squarefree monomials of the minimal non-faces; variables are the vertices.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

// For a face poset: substitutes x_s -> product of the atom variables below s
// into every generator of stanley_poset_ideal and keeps the minimal monomial
// generators of what survives.  Variables are the atoms, named by label.
MonomialIdeal reduce_face_poset_ideal(const Poset& p);

// Inclusion-minimal generators, sorted.
std::vector<Monomial> minimal_generators(std::vector<Monomial> generators);

// Mutual divisibility check.  Throws DomainError when the variable sets
// differ.
bool monomial_ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace sposet
