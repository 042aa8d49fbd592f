#include "sposet/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "sposet/error.hpp"

namespace sposet {
namespace {

constexpr std::size_t kMaxFacetSize = 20;
constexpr std::size_t kMaxCliqueVertices = 64;

bool is_subset_of(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face normalize_face(Face f) {
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw ParseError("face repeats a vertex");
  }
  return f;
}

}  // namespace

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool SimplicialComplex::has_face(const Face& face) const {
  const Face f = normalize_face(face);
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& facet) { return is_subset_of(f, facet); });
}

SimplicialComplex make_complex(std::vector<std::string> vertices,
                               std::vector<Face> facet_candidates) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw ParseError("duplicate vertex name");
  }
  for (const auto& v : vertices) {
    if (!ElementLabel::valid_vertex_name(v)) throw ParseError("invalid vertex name '" + v + "'");
  }
  std::set<Face, decltype(&face_less)> candidates(&face_less);
  for (auto& f : facet_candidates) {
    Face face = normalize_face(std::move(f));
    for (const auto& v : face) {
      if (!std::binary_search(vertices.begin(), vertices.end(), v)) {
        throw LookupError("facet uses unknown vertex '" + v + "'");
      }
    }
    if (face.size() > kMaxFacetSize) {
      throw SizeLimitError("facets are limited to " + std::to_string(kMaxFacetSize) + " vertices");
    }
    candidates.insert(std::move(face));
  }
  for (const auto& v : vertices) candidates.insert(Face{v});

  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  // Larger candidates come later in face order, so only those can absorb.
  std::vector<Face> ordered(candidates.begin(), candidates.end());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i].empty()) continue;
    bool absorbed = false;
    for (std::size_t j = i + 1; j < ordered.size() && !absorbed; ++j) {
      absorbed = ordered[j].size() > ordered[i].size() && is_subset_of(ordered[i], ordered[j]);
    }
    if (!absorbed) c.facets_.push_back(ordered[i]);
  }
  return c;
}

std::vector<Face> faces(const SimplicialComplex& c) {
  std::set<Face, decltype(&face_less)> out(&face_less);
  out.insert(Face{});
  for (const auto& facet : c.facets()) {
    const std::size_t k = facet.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      Face f;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::uint32_t{1} << b)) f.push_back(facet[b]);
      }
      out.insert(std::move(f));
    }
  }
  return {out.begin(), out.end()};
}

Poset face_poset(const SimplicialComplex& c) {
  const std::vector<Face> all = faces(c);
  if (all.size() > Poset::kMaxElements) {
    throw SizeLimitError("complex has too many faces for a face poset");
  }
  std::map<Face, std::size_t> index;
  std::vector<ElementLabel> labels;
  labels.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    index.emplace(all[i], i);
    labels.push_back(ElementLabel::atom_set(all[i]));
  }
  std::vector<IndexPair> covers;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t drop = 0; drop < all[i].size(); ++drop) {
      Face sub = all[i];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      covers.emplace_back(index.at(sub), i);
    }
  }
  return Poset::from_index_relations(std::move(labels), covers);
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  // A minimal non-face minus any vertex is a face, so every one of them is
  // some face plus one more vertex.
  const std::vector<Face> all = faces(c);
  const std::set<Face> face_set(all.begin(), all.end());
  std::set<Face, decltype(&face_less)> out(&face_less);
  for (const auto& f : all) {
    for (const auto& v : c.vertices()) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face m = f;
      m.insert(std::upper_bound(m.begin(), m.end(), v), v);
      if (face_set.count(m)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < m.size() && minimal; ++drop) {
        Face sub = m;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = face_set.count(sub) > 0;
      }
      if (minimal) out.insert(std::move(m));
    }
  }
  return {out.begin(), out.end()};
}

Graph make_graph(std::vector<std::string> vertices,
                 std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& [a, b] : edges) {
    if (a >= vertices.size() || b >= vertices.size()) {
      throw LookupError("edge references unknown vertex");
    }
    if (a == b) throw DomainError("graphs have no loops");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{std::move(vertices), std::move(edges)};
}

namespace {

using Mask = std::uint64_t;

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj,
                   std::vector<Mask>& cliques) {
  if (p == 0 && x == 0) {
    cliques.push_back(r);
    return;
  }
  // Pivot on the vertex of P | X with the most neighbours in P.
  const Mask px = p | x;
  int pivot = -1;
  int best = -1;
  for (Mask m = px; m != 0; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int deg = std::popcount(p & adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  for (Mask m = p & ~adj[pivot]; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask bit = Mask{1} << v;
    bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, cliques);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  const std::size_t n = g.vertices.size();
  if (n > kMaxCliqueVertices) {
    throw SizeLimitError("clique_complex supports at most 64 vertices");
  }
  std::vector<Face> facets;
  if (n > 0) {
    std::vector<Mask> adj(n, 0);
    for (auto [a, b] : g.edges) {
      adj[a] |= Mask{1} << b;
      adj[b] |= Mask{1} << a;
    }
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> cliques;
    bron_kerbosch(0, all, 0, adj, cliques);
    for (Mask clique : cliques) {
      Face f;
      for (Mask m = clique; m != 0; m &= m - 1) f.push_back(g.vertices[std::countr_zero(m)]);
      facets.push_back(std::move(f));
    }
  }
  return make_complex(g.vertices, std::move(facets));
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  return {{"vertices", c.vertices()}, {"facets", c.facets()}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("facets") || !j.at("facets").is_array()) {
    throw ParseError("complex JSON needs a \"facets\" array");
  }
  try {
    auto facets = j.at("facets").get<std::vector<Face>>();
    std::vector<std::string> vertices;
    if (j.contains("vertices")) {
      vertices = j.at("vertices").get<std::vector<std::string>>();
    } else {
      std::set<std::string> seen;
      for (const auto& f : facets) seen.insert(f.begin(), f.end());
      vertices.assign(seen.begin(), seen.end());
    }
    return make_complex(std::move(vertices), std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  }
}

std::vector<Face> parse_facet_string(std::string_view text) {
  std::vector<Face> facets;
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ',') continue;
    const std::string_view item = trim(text.substr(start, i - start));
    start = i + 1;
    if (item.empty()) {
      if (i == text.size() && facets.empty()) break;
      throw ParseError("empty facet in facet string");
    }
    Face f;
    std::size_t vstart = 0;
    for (std::size_t k = 0; k <= item.size(); ++k) {
      if (k != item.size() && item[k] != '*') continue;
      const std::string_view name = trim(item.substr(vstart, k - vstart));
      if (!ElementLabel::valid_vertex_name(name)) {
        throw ParseError("invalid vertex name '" + std::string(name) + "' in facet string");
      }
      f.emplace_back(name);
      vstart = k + 1;
    }
    facets.push_back(normalize_face(std::move(f)));
  }
  return facets;
}

SimplicialComplex complex_from_facet_string(std::string_view text) {
  auto facets = parse_facet_string(text);
  std::set<std::string> seen;
  for (const auto& f : facets) seen.insert(f.begin(), f.end());
  return make_complex({seen.begin(), seen.end()}, std::move(facets));
}

}  // namespace sposet
