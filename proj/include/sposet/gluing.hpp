#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sposet/poset.hpp"
#include "sposet/simplicial_complex.hpp"

namespace sposet {

// ---------------------------------------------------------------------------
// Separation

// The disjoint union of the intervals (0, x] over the maximal elements x of a
// simplicial poset, joined again at a single Bottom.  Element (i, v) carries
// the copy label "i@v", where i is the position of x among the maximal
// elements.
struct SeparationResult {
  Poset separated;
  // projection[i] = element of the input that separated element i copies.
  std::vector<std::size_t> projection;

  // Partition of the separated elements into fibres of the projection.
  std::vector<std::size_t> fibre_classes() const;
};

SeparationResult separation(const Poset& q);

// ---------------------------------------------------------------------------
// Gluing relations

class GluingRelation {
 public:
  // class_of[i] is the class id of base element i; ids are compacted.
  GluingRelation(Poset base, const std::vector<std::size_t>& class_of);

  static GluingRelation from_classes(Poset base,
                                     const std::vector<std::vector<ElementLabel>>& classes);
  static GluingRelation singletons(Poset base);

  const Poset& base() const noexcept { return base_; }
  const std::vector<std::size_t>& class_of() const noexcept { return class_of_; }
  std::size_t class_count() const noexcept { return class_count_; }
  std::vector<std::vector<std::size_t>> classes() const;

 private:
  Poset base_;
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

struct GluingViolation {
  ElementLabel first;
  ElementLabel second;
  int condition;  // 1: incomparable, equal rank, no common upper bound
                  // 2: lower set of `first` not matched inside lower set of `second`
  std::string reason;
};

struct GluingReport {
  bool valid = true;
  std::vector<GluingViolation> violations;
};

// Requires a base with a unique minimum (rank is atom-support size).
GluingReport validate_gluing(const GluingRelation& relation);

// Throws PreconditionError listing the violations of an invalid relation.
Poset quotient_by_gluing(const GluingRelation& relation);

// ---------------------------------------------------------------------------
// deltaGlue

struct GluingSpec {
  std::map<ElementLabel, ElementLabel> facet_map;  // maximal elements of X -> Y
  std::map<ElementLabel, ElementLabel> atom_map;   // atoms of X -> atoms of Y
};

// { "facet_map": {"<a>": "<b>", ...}, "atom_map": {"<a>": "<b>", ...} }
GluingSpec gluing_spec_from_json(const nlohmann::json& j);
nlohmann::json gluing_spec_to_json(const GluingSpec& spec);

// Glues simplicial posets A and B along the order ideal X of A generated by
// the facet_map keys and its image in B.  A-side elements become "0@v" and
// B-side elements "1@v", the two minima become Bottom, and identified pairs
// become class labels.  Invalid assignments throw GluingSpecError, whose
// detail() is one of: unknown-element, not-an-atom, non-injective-map,
// incompatible-facet, atom-outside-ideal, ambiguous-image,
// non-injective-image.
Poset delta_glue(const Poset& a, const Poset& b, const GluingSpec& spec);

// ---------------------------------------------------------------------------
// thetaGlue

struct ThetaConstruction {
  SeparationResult separation;  // of face_poset(D1)
  Poset face_poset_1;
  GluingRelation relation;      // identifies copies of faces shared with D2
  Poset result;
};

// D2 is first extended by every vertex of D1, so all points of D1 are shared.
ThetaConstruction theta_construction(const SimplicialComplex& d1, const SimplicialComplex& d2);
Poset theta_glue(const SimplicialComplex& d1, const SimplicialComplex& d2);

// ---------------------------------------------------------------------------
// Atom family and meet poset

// One entry per maximal element, in canonical order; duplicates are kept.
using AtomFamily = std::vector<std::vector<ElementLabel>>;

AtomFamily atom_family(const Poset& p);

// True iff no entry is contained in (or equal to) an entry at another index.
// Entries must be sorted.
template <typename T>
bool is_antichain_list(const std::vector<std::vector<T>>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                                  sets[i].end())) {
        return false;
      }
    }
  }
  return true;
}

// Union of the pairwise intersections of lower sets of distinct maximal
// elements, with the induced order.  With fewer than two maximal elements
// the result is the one-element poset {Bottom}.
Poset meet_poset(const Poset& p);

// ---------------------------------------------------------------------------
// Recognizing theta images

struct ThetaConditions {
  bool atom_family_antichain = false;      // (i)
  bool meet_poset_is_face_poset = false;   // (ii)
  // Every element below two distinct maximal elements lies below every
  // maximal element whose atom support contains its own.
  bool shared_faces_consistent = false;
  bool all() const {
    return atom_family_antichain && meet_poset_is_face_poset && shared_faces_consistent;
  }
};

ThetaConditions check_theta_conditions(const Poset& p);

struct ThetaPair {
  SimplicialComplex first;
  SimplicialComplex second;
};

// Complexes D1, D2 with theta_glue(D1, D2) isomorphic to p.  D1 has the atom
// family as facets; D2 has the supports of the meet poset as faces, plus all
// points.  Throws PreconditionError naming the first condition that fails.
ThetaPair reconstruct_theta_pair(const Poset& p);

// Vertex names used for the atoms of p by reconstruct_theta_pair, indexed
// like p.atom_indices().
std::vector<std::string> atom_vertex_names(const Poset& p);

}  // namespace sposet
