#include "sposet/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sposet/error.hpp"

namespace sposet {
namespace {

struct ClosureResult {
  bool acyclic = true;
  std::vector<ElementLabel> labels;
  std::vector<IndexPair> covers;
  BitMatrix up;
};

// Sorts the labels canonically, closes the relation and extracts its covers.
// Reports a cycle through `acyclic` instead of throwing so that callers can
// choose the error.
ClosureResult close_relation(std::vector<ElementLabel> elements,
                             const std::vector<IndexPair>& relations) {
  const std::size_t n = elements.size();
  if (n == 0) throw StructureError("a poset needs at least one element");
  if (n > Poset::kMaxElements) {
    throw SizeLimitError("poset with " + std::to_string(n) +
                         " elements exceeds the limit of " +
                         std::to_string(Poset::kMaxElements));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return elements[a] < elements[b];
  });
  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = k;

  ClosureResult result;
  result.labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) result.labels.push_back(elements[order[k]]);
  for (std::size_t k = 1; k < n; ++k) {
    if (result.labels[k - 1] == result.labels[k]) {
      throw StructureError("duplicate element label '" + result.labels[k].str() + "'");
    }
  }

  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw LookupError("relation references unknown element");
    const std::size_t na = new_index[a];
    const std::size_t nb = new_index[b];
    if (na != nb) succ[na].push_back(nb);
  }
  std::vector<std::size_t> indegree(n, 0);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t j : s) ++indegree[j];
  }

  // Kahn's algorithm; the smallest ready index goes first.
  std::vector<std::size_t> topo;
  topo.reserve(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = n; i-- > 0;) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    topo.push_back(i);
    for (std::size_t j : succ[i]) {
      if (--indegree[j] == 0) ready.push_back(j);
    }
  }
  if (topo.size() != n) {
    result.acyclic = false;
    return result;
  }

  // Strict upward closure in reverse topological order.
  BitMatrix strict(n, n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t i = *it;
    auto row = strict.row(i);
    for (std::size_t j : succ[i]) {
      kernels::or_into(row, strict.row(j));
      strict.set(i, j);
    }
  }

  // Every cover is a direct pair of the generating relation; a direct pair
  // (i, j) is a cover unless j sits strictly above another successor of i.
  std::vector<kernels::Word> above(strict.words_per_row());
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(above.begin(), above.end(), 0);
    for (std::size_t k : succ[i]) kernels::or_into(above, strict.row(k));
    for (std::size_t j : succ[i]) {
      if (((above[j / 64] >> (j % 64)) & 1u) == 0) result.covers.emplace_back(i, j);
    }
  }
  std::sort(result.covers.begin(), result.covers.end());

  for (std::size_t i = 0; i < n; ++i) strict.set(i, i);
  result.up = std::move(strict);
  return result;
}

}  // namespace

Poset Poset::from_index_relations(std::vector<ElementLabel> elements,
                                  const std::vector<IndexPair>& relations) {
  auto p = try_from_index_relations(std::move(elements), relations);
  if (!p) throw StructureError("order relation contains a cycle");
  return std::move(*p);
}

std::optional<Poset> Poset::try_from_index_relations(
    std::vector<ElementLabel> elements, const std::vector<IndexPair>& relations) {
  ClosureResult closed = close_relation(std::move(elements), relations);
  if (!closed.acyclic) return std::nullopt;

  Poset p;
  const std::size_t n = closed.labels.size();
  p.labels_ = std::move(closed.labels);
  p.covers_ = std::move(closed.covers);
  p.up_ = std::move(closed.up);
  p.down_ = p.up_.transposed();
  p.upper_.resize(n);
  p.lower_.resize(n);
  for (auto [a, b] : p.covers_) {
    p.upper_[a].push_back(b);
    p.lower_[b].push_back(a);
  }
  for (auto& l : p.lower_) std::sort(l.begin(), l.end());

  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.lower_[i].empty()) minimal.push_back(i);
  }
  if (minimal.size() == 1) {
    p.minimum_ = minimal.front();
    p.atoms_ = p.upper_[*p.minimum_];
    p.supports_ = BitMatrix(n, p.atoms_.size());
    for (std::size_t k = 0; k < p.atoms_.size(); ++k) {
      for_each_bit(p.up_.row(p.atoms_[k]), [&](std::size_t v) { p.supports_.set(v, k); });
    }
  }
  return p;
}

Poset Poset::from_relations(std::vector<ElementLabel> elements,
                            const std::vector<LabelPair>& relations) {
  std::map<ElementLabel, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<IndexPair> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw LookupError("unknown element '" + a.str() + "'");
    if (ib == index.end()) throw LookupError("unknown element '" + b.str() + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_index_relations(std::move(elements), pairs);
}

Poset Poset::from_covers(std::vector<ElementLabel> elements,
                         const std::vector<LabelPair>& covers) {
  Poset p = from_relations(std::move(elements), covers);
  std::vector<IndexPair> given;
  given.reserve(covers.size());
  for (const auto& [a, b] : covers) given.emplace_back(p.index_of(a), p.index_of(b));
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != p.covers_) {
    throw StructureError("cover relation is not transitively reduced");
  }
  return p;
}

std::optional<std::size_t> Poset::find(const ElementLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Poset::index_of(const ElementLabel& label) const {
  if (auto i = find(label)) return *i;
  throw LookupError("unknown element '" + label.str() + "'");
}

bool Poset::leq(const ElementLabel& a, const ElementLabel& b) const {
  return leq(index_of(a), index_of(b));
}

void Poset::require_minimum() const {
  if (!minimum_) throw StructureError("poset has no unique minimum");
}

std::size_t Poset::bottom() const {
  require_minimum();
  return *minimum_;
}

const std::vector<std::size_t>& Poset::atom_indices() const {
  require_minimum();
  return atoms_;
}

const BitMatrix& Poset::supports() const {
  require_minimum();
  return supports_;
}

std::size_t Poset::rank(std::size_t i) const {
  require_minimum();
  return kernels::popcount(supports_.row(i));
}

Poset Poset::induced(std::vector<std::size_t> subset) const {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<ElementLabel> labels;
  labels.reserve(subset.size());
  for (std::size_t i : subset) labels.push_back(labels_.at(i));
  std::vector<IndexPair> relations;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      if (a != b && leq(subset[a], subset[b])) relations.emplace_back(a, b);
    }
  }
  return from_index_relations(std::move(labels), relations);
}

Poset boolean_lattice(std::size_t n) {
  if (n > 20) {
    throw SizeLimitError("boolean_lattice(" + std::to_string(n) + ") exceeds n <= 20");
  }
  if ((std::size_t{1} << n) > Poset::kMaxElements) {
    throw SizeLimitError("boolean_lattice(" + std::to_string(n) +
                         ") exceeds the poset element limit");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<ElementLabel> labels;
  labels.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::string> vertices;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (std::size_t{1} << b)) vertices.push_back("x" + std::to_string(b + 1));
    }
    labels.push_back(ElementLabel::atom_set(std::move(vertices)));
  }
  std::vector<IndexPair> covers;
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!(mask & (std::size_t{1} << b))) covers.emplace_back(mask, mask | (std::size_t{1} << b));
    }
  }
  return Poset::from_index_relations(std::move(labels), covers);
}

Poset chain(std::size_t length) {
  std::vector<ElementLabel> labels{ElementLabel::bottom()};
  std::vector<IndexPair> covers;
  for (std::size_t k = 1; k <= length; ++k) {
    labels.push_back(ElementLabel::vertex("c" + std::to_string(k)));
    covers.emplace_back(k - 1, k);
  }
  return Poset::from_index_relations(std::move(labels), covers);
}

namespace {

std::vector<ElementLabel> labels_of(const Poset& p, const std::vector<std::size_t>& idx) {
  std::vector<ElementLabel> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(p.label(i));
  return out;
}

}  // namespace

std::vector<ElementLabel> atoms(const Poset& p) {
  return labels_of(p, p.atom_indices());
}

std::vector<ElementLabel> lower_set(const Poset& p, const ElementLabel& v) {
  return labels_of(p, p.down().row_indices(p.index_of(v)));
}

std::vector<std::size_t> maximal_indices(const Poset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.upper_covers(i).empty()) out.push_back(i);
  }
  return out;
}

std::vector<ElementLabel> maximal_elements(const Poset& p) {
  return labels_of(p, maximal_indices(p));
}

AtomSupport atom_support(const Poset& p, const ElementLabel& v) {
  const std::size_t i = p.index_of(v);
  AtomSupport out{v, {}};
  const auto& atom_idx = p.atom_indices();
  for_each_bit(p.supports().row(i), [&](std::size_t k) {
    out.atoms.push_back(p.label(atom_idx[k]));
  });
  return out;
}

bool is_simplicial(const Poset& p) {
  if (!p.has_unique_minimum()) return false;
  const BitMatrix& supports = p.supports();
  std::vector<std::size_t> support_atoms;
  std::vector<bool> seen;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const std::size_t k = kernels::popcount(supports.row(v));
    const std::size_t lower = kernels::popcount(p.down().row(v));
    if (k >= 63 || lower != (std::size_t{1} << k)) return false;

    // Supports inside [0, v] must be pairwise distinct.  Together with the
    // size count over every v this makes each interval a boolean lattice:
    // if A(w1) <= A(w2) for w1, w2 <= v, the element of [0, w2] with support
    // A(w1) must be w1 by injectivity on [0, v].
    support_atoms.clear();
    for_each_bit(supports.row(v), [&](std::size_t a) { support_atoms.push_back(a); });
    seen.assign(lower, false);
    bool injective = true;
    for_each_bit(p.down().row(v), [&](std::size_t w) {
      if (!injective) return;
      std::size_t mask = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (supports.test(w, support_atoms[b])) mask |= std::size_t{1} << b;
      }
      if (seen[mask]) injective = false;
      seen[mask] = true;
    });
    if (!injective) return false;
  }
  return true;
}

bool is_face_poset(const Poset& p) {
  if (!is_simplicial(p)) {
    throw PreconditionError("is_face_poset requires a simplicial poset");
  }
  const BitMatrix& supports = p.supports();
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b) {
    auto ra = supports.row(a);
    auto rb = supports.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), row_less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    auto ra = supports.row(order[k - 1]);
    auto rb = supports.row(order[k]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

std::vector<std::size_t> minimal_upper_bound_indices(const Poset& p, std::size_t s,
                                                     std::size_t t) {
  std::vector<kernels::Word> common(p.up().row(s).begin(), p.up().row(s).end());
  kernels::and_into(common, p.up().row(t));
  std::vector<std::size_t> out;
  for_each_bit(common, [&](std::size_t u) {
    if (kernels::and_popcount(p.down().row(u), common) == 1) out.push_back(u);
  });
  return out;
}

std::vector<ElementLabel> minimal_upper_bounds(const Poset& p, const ElementLabel& s,
                                               const ElementLabel& t) {
  return labels_of(p, minimal_upper_bound_indices(p, p.index_of(s), p.index_of(t)));
}

std::size_t meet_index(const Poset& p, std::size_t s, std::size_t t) {
  const auto bounds = minimal_upper_bound_indices(p, s, t);
  std::vector<kernels::Word> lower(p.down().row(s).begin(), p.down().row(s).end());
  kernels::and_into(lower, p.down().row(t));
  std::vector<std::size_t> maximal;
  for_each_bit(lower, [&](std::size_t c) {
    if (kernels::and_popcount(p.up().row(c), lower) == 1) maximal.push_back(c);
  });
  if (maximal.size() != 1) {
    if (bounds.empty()) {
      throw DomainError("'" + p.label(s).str() + "' and '" + p.label(t).str() +
                        "' have neither a common upper bound nor a greatest common lower bound");
    }
    throw InvariantError("common lower bounds have no unique maximum");
  }

  // The meet seen from inside each interval [0, u] must agree.
  const BitMatrix& supports = p.supports();
  std::vector<kernels::Word> target(supports.row(s).begin(), supports.row(s).end());
  kernels::and_into(target, supports.row(t));
  for (std::size_t u : bounds) {
    std::optional<std::size_t> found;
    for_each_bit(p.down().row(u), [&](std::size_t w) {
      auto row = supports.row(w);
      if (std::equal(row.begin(), row.end(), target.begin())) found = w;
    });
    if (found != maximal.front()) {
      throw InvariantError("meet depends on the choice of upper bound");
    }
  }
  return maximal.front();
}

ElementLabel meet(const Poset& p, const ElementLabel& s, const ElementLabel& t) {
  return p.label(meet_index(p, p.index_of(s), p.index_of(t)));
}

Poset quotient(const Poset& p, const std::vector<std::size_t>& class_of) {
  if (class_of.size() != p.size()) {
    throw PreconditionError("partition does not cover every element");
  }
  std::size_t class_count = 0;
  for (std::size_t c : class_of) class_count = std::max(class_count, c + 1);
  std::vector<std::vector<std::size_t>> members(class_count);
  for (std::size_t i = 0; i < class_of.size(); ++i) members[class_of[i]].push_back(i);

  std::vector<ElementLabel> labels;
  labels.reserve(class_count);
  for (const auto& m : members) {
    if (m.empty()) throw PreconditionError("partition has an empty class");
    if (m.size() == 1) {
      labels.push_back(p.label(m.front()));
    } else {
      std::vector<ElementLabel> member_labels;
      for (std::size_t i : m) member_labels.push_back(p.label(i));
      labels.push_back(ElementLabel::class_of(std::move(member_labels)));
    }
  }

  std::vector<IndexPair> relations;
  for (auto [a, b] : p.covers()) {
    if (class_of[a] != class_of[b]) relations.emplace_back(class_of[a], class_of[b]);
  }
  auto q = Poset::try_from_index_relations(std::move(labels), relations);
  if (!q) throw StructureError("quotient is not a partial order");
  return std::move(*q);
}

Poset quotient(const Poset& p, const std::vector<std::vector<ElementLabel>>& classes) {
  std::vector<std::size_t> class_of(p.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& label : classes[c]) {
      const auto i = p.find(label);
      if (!i) throw PreconditionError("partition names unknown element '" + label.str() + "'");
      if (class_of[*i] != static_cast<std::size_t>(-1)) {
        throw PreconditionError("element '" + label.str() + "' appears in two classes");
      }
      class_of[*i] = c;
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (class_of[i] == static_cast<std::size_t>(-1)) {
      throw PreconditionError("element '" + p.label(i).str() + "' is in no class");
    }
  }
  return quotient(p, class_of);
}

}  // namespace sposet
