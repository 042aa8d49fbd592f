#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sposet/poset.hpp"

namespace sposet {

// A face is a sorted list of vertex names.  Face lists are kept in the same
// order as atom-set labels: by size, then lexicographically.
using Face = std::vector<std::string>;

bool face_less(const Face& a, const Face& b);

// Abstract simplicial complex on an explicit vertex set.  Every vertex is a
// face, so a vertex outside all larger facets is a facet of its own.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  bool has_face(const Face& face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex make_complex(std::vector<std::string>, std::vector<Face>);
  std::vector<std::string> vertices_;
  std::vector<Face> facets_;
};

// Drops candidates contained in other candidates and adds uncovered vertices
// as singleton facets.  Throws LookupError for a vertex outside `vertices`.
SimplicialComplex make_complex(std::vector<std::string> vertices,
                               std::vector<Face> facet_candidates);

// All faces, the empty face included, in face order.
std::vector<Face> faces(const SimplicialComplex& c);

Poset face_poset(const SimplicialComplex& c);

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

// Validates and normalizes the edge list.  Throws on loops or bad indices.
Graph make_graph(std::vector<std::string> vertices,
                 std::vector<std::pair<std::size_t, std::size_t>> edges);

// Facets are the maximal cliques (Bron-Kerbosch with pivoting).  At most 64
// vertices.
SimplicialComplex clique_complex(const Graph& g);

// { "vertices": [...], "facets": [[...], ...] }; "vertices" may be omitted on
// input, in which case the facet vertices are used.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// Shorthand "a*b*c,b*c*d": comma-separated facets of '*'-joined vertices.
std::vector<Face> parse_facet_string(std::string_view text);
// Complex on the vertices that appear in the shorthand.
SimplicialComplex complex_from_facet_string(std::string_view text);

}  // namespace sposet
