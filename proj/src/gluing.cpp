#include "sposet/gluing.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "sposet/error.hpp"

namespace sposet {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<kernels::Word> row_copy(std::span<const kernels::Word> row) {
  return {row.begin(), row.end()};
}

void require_simplicial(const Poset& p, const char* what) {
  if (!is_simplicial(p)) {
    throw PreconditionError(std::string(what) + " requires a simplicial poset");
  }
}

// Renumbers class ids to 0..k-1 in order of first appearance.
std::size_t compact(std::vector<std::size_t>& class_of) {
  std::map<std::size_t, std::size_t> ids;
  for (auto& c : class_of) c = ids.emplace(c, ids.size()).first->second;
  return ids.size();
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::size_t> SeparationResult::fibre_classes() const {
  return projection;
}

SeparationResult separation(const Poset& q) {
  require_simplicial(q, "separation");
  const std::size_t bottom = q.bottom();
  const auto maximal = maximal_indices(q);

  std::vector<ElementLabel> labels{ElementLabel::bottom()};
  std::vector<std::size_t> origin{bottom};
  std::vector<IndexPair> covers;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    const auto lower = q.down().row_indices(maximal[i]);
    std::map<std::size_t, std::size_t> local;  // q index -> separated index
    local[bottom] = 0;
    for (std::size_t v : lower) {
      if (v == bottom) continue;
      local[v] = labels.size();
      labels.push_back(ElementLabel::copy(i, q.label(v)));
      origin.push_back(v);
    }
    for (std::size_t v : lower) {
      for (std::size_t l : q.lower_covers(v)) covers.emplace_back(local.at(l), local.at(v));
    }
  }

  SeparationResult result{Poset::from_index_relations(labels, covers), {}};
  result.projection.resize(result.separated.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    result.projection[result.separated.index_of(labels[k])] = origin[k];
  }
  return result;
}

// ---------------------------------------------------------------------------

GluingRelation::GluingRelation(Poset base, const std::vector<std::size_t>& class_of)
    : base_(std::move(base)), class_of_(class_of) {
  if (class_of_.size() != base_.size()) {
    throw PreconditionError("gluing relation must assign a class to every element");
  }
  class_count_ = compact(class_of_);
}

GluingRelation GluingRelation::from_classes(
    Poset base, const std::vector<std::vector<ElementLabel>>& classes) {
  std::vector<std::size_t> class_of(base.size(), kNone);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& label : classes[c]) {
      const auto i = base.find(label);
      if (!i) throw PreconditionError("relation names unknown element '" + label.str() + "'");
      if (class_of[*i] != kNone) {
        throw PreconditionError("element '" + label.str() + "' is in two classes");
      }
      class_of[*i] = c;
    }
  }
  std::size_t next = classes.size();
  for (auto& c : class_of) {
    if (c == kNone) c = next++;
  }
  return GluingRelation(std::move(base), class_of);
}

GluingRelation GluingRelation::singletons(Poset base) {
  std::vector<std::size_t> class_of(base.size());
  std::iota(class_of.begin(), class_of.end(), 0);
  return GluingRelation(std::move(base), class_of);
}

std::vector<std::vector<std::size_t>> GluingRelation::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count_);
  for (std::size_t i = 0; i < class_of_.size(); ++i) out[class_of_[i]].push_back(i);
  return out;
}

GluingReport validate_gluing(const GluingRelation& relation) {
  const Poset& p = relation.base();
  const auto& class_of = relation.class_of();
  GluingReport report;
  auto fail = [&](std::size_t a, std::size_t b, int condition, std::string reason) {
    report.valid = false;
    report.violations.push_back({p.label(a), p.label(b), condition, std::move(reason)});
  };

  std::vector<bool> present;
  for (const auto& members : relation.classes()) {
    if (members.size() < 2) continue;
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const std::size_t a = members[x];
        const std::size_t b = members[y];
        if (p.comparable(a, b)) {
          fail(a, b, 1, "related elements are comparable");
        } else if (p.rank(a) != p.rank(b)) {
          fail(a, b, 1, "related elements have different rank");
        } else if (kernels::intersects(p.up().row(a), p.up().row(b))) {
          fail(a, b, 1, "related elements have a common upper bound");
        }
      }
    }
    // Condition 2, for each ordered pair (tau, sigma) of the class.
    for (std::size_t sigma : members) {
      present.assign(relation.class_count(), false);
      for_each_bit(p.down().row(sigma), [&](std::size_t w) { present[class_of[w]] = true; });
      for (std::size_t tau : members) {
        if (tau == sigma) continue;
        bool ok = true;
        for_each_bit(p.down().row(tau), [&](std::size_t u) { ok = ok && present[class_of[u]]; });
        if (!ok) {
          fail(tau, sigma, 2, "an element below the first is related to nothing below the second");
        }
      }
    }
  }
  return report;
}

Poset quotient_by_gluing(const GluingRelation& relation) {
  const GluingReport report = validate_gluing(relation);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "not a gluing relation:";
    for (const auto& v : report.violations) {
      msg << "\n  condition " << v.condition << ": " << v.first << " ~ " << v.second << " ("
          << v.reason << ")";
    }
    throw PreconditionError(msg.str());
  }
  Poset q = quotient(relation.base(), relation.class_of());
  if (!is_simplicial(q)) throw InvariantError("quotient by a gluing relation is not simplicial");
  return q;
}

// ---------------------------------------------------------------------------

GluingSpec gluing_spec_from_json(const nlohmann::json& j) {
  GluingSpec spec;
  auto read_map = [&](const char* key, std::map<ElementLabel, ElementLabel>& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_object()) throw ParseError(std::string("\"") + key + "\" must be an object");
    for (const auto& [k, v] : j.at(key).items()) {
      if (!v.is_string()) throw ParseError("gluing spec values must be label strings");
      out.emplace(ElementLabel::parse(k), ElementLabel::parse(v.get<std::string>()));
    }
  };
  if (!j.is_object()) throw ParseError("gluing spec must be a JSON object");
  read_map("facet_map", spec.facet_map);
  read_map("atom_map", spec.atom_map);
  return spec;
}

nlohmann::json gluing_spec_to_json(const GluingSpec& spec) {
  nlohmann::json facets = nlohmann::json::object();
  for (const auto& [k, v] : spec.facet_map) facets[k.str()] = v.str();
  nlohmann::json atoms = nlohmann::json::object();
  for (const auto& [k, v] : spec.atom_map) atoms[k.str()] = v.str();
  return {{"facet_map", facets}, {"atom_map", atoms}};
}

Poset delta_glue(const Poset& a, const Poset& b, const GluingSpec& spec) {
  require_simplicial(a, "delta_glue");
  require_simplicial(b, "delta_glue");

  // Atom positions in each poset.
  std::map<std::size_t, std::size_t> a_atom_pos;
  for (std::size_t k = 0; k < a.atom_indices().size(); ++k) a_atom_pos[a.atom_indices()[k]] = k;
  std::map<std::size_t, std::size_t> b_atom_pos;
  for (std::size_t k = 0; k < b.atom_indices().size(); ++k) b_atom_pos[b.atom_indices()[k]] = k;

  std::vector<std::size_t> atom_image(a.atom_indices().size(), kNone);  // A pos -> B pos
  std::set<std::size_t> atom_targets;
  for (const auto& [from, to] : spec.atom_map) {
    const auto ia = a.find(from);
    const auto ib = b.find(to);
    if (!ia || !ib) throw GluingSpecError("unknown-element");
    if (!a_atom_pos.count(*ia) || !b_atom_pos.count(*ib)) throw GluingSpecError("not-an-atom");
    if (!atom_targets.insert(*ib).second) throw GluingSpecError("non-injective-map");
    atom_image[a_atom_pos[*ia]] = b_atom_pos[*ib];
  }

  std::vector<IndexPair> facet_pairs;
  std::set<std::size_t> facet_targets;
  for (const auto& [from, to] : spec.facet_map) {
    const auto ia = a.find(from);
    const auto ib = b.find(to);
    if (!ia || !ib) throw GluingSpecError("unknown-element");
    if (!facet_targets.insert(*ib).second) throw GluingSpecError("non-injective-map");
    facet_pairs.emplace_back(*ia, *ib);
  }

  // Image of each A-element of the ideal X, indexed by A index.
  std::vector<std::size_t> image(a.size(), kNone);
  std::vector<bool> atom_in_ideal(a.atom_indices().size(), false);
  const BitMatrix& a_sup = a.supports();
  const BitMatrix& b_sup = b.supports();
  for (auto [x, y] : facet_pairs) {
    // Atoms below x must map exactly onto the atoms below y.
    std::vector<kernels::Word> mapped(b_sup.words_per_row(), 0);
    bool complete = true;
    for_each_bit(a_sup.row(x), [&](std::size_t k) {
      atom_in_ideal[k] = true;
      if (atom_image[k] == kNone) {
        complete = false;
        return;
      }
      mapped[atom_image[k] / 64] |= kernels::Word{1} << (atom_image[k] % 64);
    });
    const auto target = row_copy(b_sup.row(y));
    if (!complete || mapped != target) throw GluingSpecError("incompatible-facet");

    std::map<std::vector<kernels::Word>, std::size_t> below_y;
    for_each_bit(b.down().row(y), [&](std::size_t u) { below_y.emplace(row_copy(b_sup.row(u)), u); });
    for_each_bit(a.down().row(x), [&](std::size_t w) {
      std::vector<kernels::Word> support(b_sup.words_per_row(), 0);
      for_each_bit(a_sup.row(w), [&](std::size_t k) {
        support[atom_image[k] / 64] |= kernels::Word{1} << (atom_image[k] % 64);
      });
      const std::size_t u = below_y.at(support);
      if (image[w] != kNone && image[w] != u) throw GluingSpecError("ambiguous-image");
      image[w] = u;
    });
  }
  for (std::size_t k = 0; k < atom_image.size(); ++k) {
    if (atom_image[k] != kNone && !atom_in_ideal[k]) throw GluingSpecError("atom-outside-ideal");
  }
  std::vector<std::size_t> preimage(b.size(), kNone);
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (image[w] == kNone) continue;
    if (preimage[image[w]] != kNone) throw GluingSpecError("non-injective-image");
    preimage[image[w]] = w;
  }

  // Disjoint union A + B sharing Bottom: A indices first, then the
  // non-minimal elements of B.
  std::vector<ElementLabel> labels;
  labels.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    labels.push_back(i == a.bottom() ? ElementLabel::bottom() : ElementLabel::copy(0, a.label(i)));
  }
  std::vector<std::size_t> b_pos(b.size(), a.bottom());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i == b.bottom()) continue;
    b_pos[i] = labels.size();
    labels.push_back(ElementLabel::copy(1, b.label(i)));
  }
  std::vector<IndexPair> covers(a.covers().begin(), a.covers().end());
  for (auto [l, u] : b.covers()) covers.emplace_back(b_pos[l], b_pos[u]);
  const Poset joined = Poset::from_index_relations(labels, covers);

  std::vector<std::size_t> class_of(joined.size());
  std::iota(class_of.begin(), class_of.end(), 0);
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (image[w] == kNone || w == a.bottom()) continue;
    class_of[joined.index_of(labels[b_pos[image[w]]])] = class_of[joined.index_of(labels[w])];
  }
  GluingRelation relation(joined, class_of);
  Poset glued = quotient(joined, relation.class_of());
  if (!is_simplicial(glued)) throw InvariantError("delta_glue produced a non-simplicial poset");
  return glued;
}

// ---------------------------------------------------------------------------

ThetaConstruction theta_construction(const SimplicialComplex& d1, const SimplicialComplex& d2) {
  Poset p1 = face_poset(d1);
  SeparationResult sep = separation(p1);
  const Poset& sp = sep.separated;

  // Faces of D1 that also lie in D2 (with every point of D1 added to D2).
  std::vector<bool> shared(p1.size(), false);
  for (std::size_t v = 0; v < p1.size(); ++v) {
    const Face& face = p1.label(v).vertices();
    shared[v] = face.size() <= 1 || d2.has_face(face);
  }
  std::vector<std::size_t> class_of(sp.size());
  for (std::size_t e = 0; e < sp.size(); ++e) {
    const std::size_t v = sep.projection[e];
    class_of[e] = shared[v] ? v : p1.size() + e;
  }
  GluingRelation relation(sp, class_of);
  Poset result = quotient_by_gluing(relation);
  return ThetaConstruction{std::move(sep), std::move(p1), std::move(relation), std::move(result)};
}

Poset theta_glue(const SimplicialComplex& d1, const SimplicialComplex& d2) {
  return theta_construction(d1, d2).result;
}

// ---------------------------------------------------------------------------

AtomFamily atom_family(const Poset& p) {
  require_simplicial(p, "atom_family");
  AtomFamily family;
  for (std::size_t m : maximal_indices(p)) {
    std::vector<ElementLabel> atoms_below;
    for_each_bit(p.supports().row(m), [&](std::size_t k) {
      atoms_below.push_back(p.label(p.atom_indices()[k]));
    });
    family.push_back(std::move(atoms_below));
  }
  return family;
}

namespace {

// Indices of the elements lying below at least two distinct maximal elements.
std::vector<kernels::Word> shared_elements(const Poset& p, const std::vector<std::size_t>& maximal) {
  std::vector<kernels::Word> seen_once(p.down().words_per_row(), 0);
  std::vector<kernels::Word> shared(p.down().words_per_row(), 0);
  for (std::size_t m : maximal) {
    auto row = p.down().row(m);
    for (std::size_t w = 0; w < row.size(); ++w) {
      shared[w] |= seen_once[w] & row[w];
      seen_once[w] |= row[w];
    }
  }
  return shared;
}

}  // namespace

Poset meet_poset(const Poset& p) {
  require_simplicial(p, "meet_poset");
  const auto maximal = maximal_indices(p);
  if (maximal.size() <= 1) return Poset::from_index_relations({ElementLabel::bottom()}, {});
  std::vector<std::size_t> subset;
  for_each_bit(shared_elements(p, maximal), [&](std::size_t i) { subset.push_back(i); });
  return p.induced(std::move(subset));
}

ThetaConditions check_theta_conditions(const Poset& p) {
  require_simplicial(p, "check_theta_conditions");
  ThetaConditions c;
  c.atom_family_antichain = is_antichain_list(atom_family(p));
  c.meet_poset_is_face_poset = is_face_poset(meet_poset(p));

  const auto maximal = maximal_indices(p);
  c.shared_faces_consistent = true;
  if (maximal.size() >= 2) {
    for_each_bit(shared_elements(p, maximal), [&](std::size_t e) {
      for (std::size_t m : maximal) {
        if (kernels::is_subset(p.supports().row(e), p.supports().row(m)) && !p.leq(e, m)) {
          c.shared_faces_consistent = false;
        }
      }
    });
  }
  return c;
}

namespace {

// The single vertex name a label stands for, if there is one.
std::optional<std::string> underlying_vertex(const ElementLabel& label) {
  switch (label.kind()) {
    case ElementLabel::Kind::kAtomSet:
      if (label.vertices().size() == 1) return label.vertices().front();
      return std::nullopt;
    case ElementLabel::Kind::kCopy:
      return underlying_vertex(label.base());
    case ElementLabel::Kind::kClass: {
      std::optional<std::string> common;
      for (const auto& m : label.members()) {
        auto v = underlying_vertex(m);
        if (!v || (common && *common != *v)) return std::nullopt;
        common = v;
      }
      return common;
    }
    case ElementLabel::Kind::kBottom:
      break;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> atom_vertex_names(const Poset& p) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool usable = true;
  for (std::size_t a : p.atom_indices()) {
    auto v = underlying_vertex(p.label(a));
    if (!v || !seen.insert(*v).second) {
      usable = false;
      break;
    }
    names.push_back(*v);
  }
  if (usable) return names;
  names.clear();
  for (std::size_t k = 0; k < p.atom_indices().size(); ++k) names.push_back("v" + std::to_string(k + 1));
  return names;
}

ThetaPair reconstruct_theta_pair(const Poset& p) {
  require_simplicial(p, "reconstruct_theta_pair");
  const ThetaConditions c = check_theta_conditions(p);
  if (!c.atom_family_antichain) {
    throw PreconditionError("condition (i) fails: the atom family is not an antichain");
  }
  if (!c.meet_poset_is_face_poset) {
    throw PreconditionError("condition (ii) fails: the meet poset is not a face poset");
  }
  if (!c.shared_faces_consistent) {
    throw PreconditionError(
        "shared-face condition fails: an element below two maximal elements is missing below "
        "another maximal element whose support contains it");
  }

  const auto names = atom_vertex_names(p);
  auto support_face = [&](std::size_t v) {
    Face f;
    for_each_bit(p.supports().row(v), [&](std::size_t k) { f.push_back(names[k]); });
    return f;
  };
  std::vector<Face> facets1;
  for (std::size_t m : maximal_indices(p)) facets1.push_back(support_face(m));
  std::vector<Face> faces2;
  const auto maximal = maximal_indices(p);
  if (maximal.size() >= 2) {
    for_each_bit(shared_elements(p, maximal), [&](std::size_t e) { faces2.push_back(support_face(e)); });
  }
  return ThetaPair{make_complex(names, std::move(facets1)), make_complex(names, std::move(faces2))};
}

}  // namespace sposet
