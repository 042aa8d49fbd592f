#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sposet/bit_matrix.hpp"
#include "sposet/label.hpp"

namespace sposet {

using LabelPair = std::pair<ElementLabel, ElementLabel>;
using IndexPair = std::pair<std::size_t, std::size_t>;

// A finite poset with immutable, materialized reachability.
//
// Elements are stored in canonical label order, so element indices, cover
// lists and every derived set come out in a deterministic order.  up() holds
// the reflexive upward closure (row i = {j : i <= j}); down() is its
// transpose.  When the poset has a unique minimum the atoms and the atom
// support of every element are cached as well.
class Poset {
 public:
  // Hard cap on the element count; reachability is quadratic in memory.
  static constexpr std::size_t kMaxElements = std::size_t{1} << 14;

  // `covers` must already be acyclic and transitively reduced.
  static Poset from_covers(std::vector<ElementLabel> elements,
                           const std::vector<LabelPair>& covers);

  // Takes any generating relation (pairs lower <= upper) and closes it.
  static Poset from_relations(std::vector<ElementLabel> elements,
                              const std::vector<LabelPair>& relations);

  // Index form of from_relations; indices refer to `elements` as given.
  static Poset from_index_relations(std::vector<ElementLabel> elements,
                                    const std::vector<IndexPair>& relations);
  // As above, but returns nullopt when the relation has a cycle.
  static std::optional<Poset> try_from_index_relations(
      std::vector<ElementLabel> elements, const std::vector<IndexPair>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<ElementLabel>& elements() const noexcept { return labels_; }
  const ElementLabel& label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> find(const ElementLabel& label) const;
  // Throws LookupError for unknown labels.
  std::size_t index_of(const ElementLabel& label) const;
  bool contains(const ElementLabel& label) const { return find(label).has_value(); }

  bool leq(std::size_t a, std::size_t b) const noexcept { return up_.test(a, b); }
  bool leq(const ElementLabel& a, const ElementLabel& b) const;
  bool comparable(std::size_t a, std::size_t b) const noexcept {
    return leq(a, b) || leq(b, a);
  }

  // Cover pairs sorted by (lower, upper).
  const std::vector<IndexPair>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }

  const BitMatrix& up() const noexcept { return up_; }
  const BitMatrix& down() const noexcept { return down_; }

  std::optional<std::size_t> minimum() const noexcept { return minimum_; }
  bool has_unique_minimum() const noexcept { return minimum_.has_value(); }

  // The following throw StructureError without a unique minimum.
  std::size_t bottom() const;
  const std::vector<std::size_t>& atom_indices() const;
  // Row i: atom positions (indices into atom_indices()) weakly below i.
  const BitMatrix& supports() const;
  // rank(v) = |A(v)|.
  std::size_t rank(std::size_t i) const;

  // Subposet on `subset` with the induced order.
  Poset induced(std::vector<std::size_t> subset) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  Poset() = default;
  void require_minimum() const;

  std::vector<ElementLabel> labels_;
  std::vector<IndexPair> covers_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  BitMatrix up_;
  BitMatrix down_;
  std::optional<std::size_t> minimum_;
  std::vector<std::size_t> atoms_;
  BitMatrix supports_;
};

// Power set of {x1, ..., xn} under inclusion.  n <= 20, and the element cap
// of Poset applies on top of that.
Poset boolean_lattice(std::size_t n);

// A totally ordered poset 0 < c1 < ... < c(length).
Poset chain(std::size_t length);

std::vector<ElementLabel> atoms(const Poset& p);
std::vector<ElementLabel> lower_set(const Poset& p, const ElementLabel& v);
std::vector<ElementLabel> maximal_elements(const Poset& p);
std::vector<std::size_t> maximal_indices(const Poset& p);

struct AtomSupport {
  ElementLabel element;
  std::vector<ElementLabel> atoms;
};
AtomSupport atom_support(const Poset& p, const ElementLabel& v);

bool is_simplicial(const Poset& p);

// Throws PreconditionError when p is not simplicial.
bool is_face_poset(const Poset& p);

std::vector<ElementLabel> minimal_upper_bounds(const Poset& p,
                                               const ElementLabel& s,
                                               const ElementLabel& t);
std::vector<std::size_t> minimal_upper_bound_indices(const Poset& p,
                                                     std::size_t s,
                                                     std::size_t t);

// Greatest common lower bound.  Requires a simplicial p.  Throws DomainError
// when there is neither a common upper bound nor a unique greatest lower bound.
ElementLabel meet(const Poset& p, const ElementLabel& s, const ElementLabel& t);
std::size_t meet_index(const Poset& p, std::size_t s, std::size_t t);

// Order isomorphism search (backtracking over colour-refined candidates).
// Returns, for each element index of p, the matching index of q.
inline constexpr std::size_t kMaxIsomorphismSize = 500;
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p,
                                                         const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);

// Quotient by a partition.  A singleton class keeps its member's label; a
// larger class gets a class label.  Throws PreconditionError for a bad
// partition and StructureError("quotient is not a partial order") when the
// induced order is not antisymmetric.
Poset quotient(const Poset& p, const std::vector<std::vector<ElementLabel>>& classes);
// class_of[i] = class id of element i; ids must be 0..k-1 without gaps.
Poset quotient(const Poset& p, const std::vector<std::size_t>& class_of);

}  // namespace sposet
