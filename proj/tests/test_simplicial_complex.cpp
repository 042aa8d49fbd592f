#include <gtest/gtest.h>

#include "sposet/error.hpp"
#include "sposet/poset_io.hpp"
#include "sposet/simplicial_complex.hpp"
#include "test_support.hpp"

namespace sposet {
namespace {

using testing::complex_of;

std::vector<Face> F(std::initializer_list<std::initializer_list<const char*>> faces) {
  std::vector<Face> out;
  for (auto f : faces) {
    Face face;
    for (const char* v : f) face.emplace_back(v);
    out.push_back(face);
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

TEST(MakeComplex, Examples) {
  EXPECT_EQ(make_complex({"a", "b", "c", "d"}, F({{"a", "b", "c"}, {"b", "c", "d"}})).facets(),
            F({{"a", "b", "c"}, {"b", "c", "d"}}));
  EXPECT_EQ(make_complex({"a", "b", "c"}, F({{"a", "b", "c"}, {"b", "c"}})).facets(), F({{"a", "b", "c"}}));
  EXPECT_EQ(make_complex({"a", "b", "c", "x", "y"}, F({{"a", "b"}, {"b", "c"}, {"a", "c"}})).facets(),
            F({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"x"}, {"y"}}));
  EXPECT_THROW(make_complex({"a"}, F({{"a", "b"}})), LookupError);
  EXPECT_TRUE(make_complex({}, {}).facets().empty());
}

TEST(Faces, Examples) {
  EXPECT_EQ(faces(complex_of("a*b")), (std::vector<Face>{{}, {"a"}, {"b"}, {"a", "b"}}));
  EXPECT_EQ(faces(complex_of("a")), (std::vector<Face>{{}, {"a"}}));
  // 8 + 8 subsets minus the 4 subsets of bc counted twice.
  EXPECT_EQ(faces(complex_of("a*b*c,b*c*d")).size(), 12u);
}

TEST(Faces, MatchBruteForceProperty) {
  testing::TestRng rng(41);
  for (int rep = 0; rep < 100; ++rep) {
    const SimplicialComplex c = testing::random_complex(rng, 7);
    const auto fs = faces(c);
    const auto oracle = testing::brute_force_faces(c);
    EXPECT_EQ(std::set<Face>(fs.begin(), fs.end()), oracle);
    EXPECT_EQ(fs.size(), oracle.size());
    EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end(), face_less));
    for (const auto& f : oracle) EXPECT_TRUE(c.has_face(f));
    // Facets form an antichain covering every vertex.
    std::vector<std::vector<std::string>> facets(c.facets().begin(), c.facets().end());
    EXPECT_TRUE(is_antichain_list(facets));
    for (const auto& v : c.vertices()) EXPECT_TRUE(c.has_face({v}));
  }
}

TEST(FacePoset, Examples) {
  const Poset two = face_poset(complex_of("a"));
  EXPECT_TRUE(are_isomorphic(two, chain(1)));
  EXPECT_TRUE(is_face_poset(face_poset(complex_of("a*b*c,b*c,a*e"))));
  const Poset p = face_poset(complex_of("a*b*c,b*c*d"));
  EXPECT_EQ(p.size(), 12u);
  EXPECT_EQ(maximal_elements(p), testing::Ls({"a*b*c", "b*c*d"}));
}

TEST(FacePoset, IsFacePosetProperty) {
  testing::TestRng rng(43);
  for (int rep = 0; rep < 80; ++rep) {
    const SimplicialComplex c = testing::random_complex(rng, 6);
    const Poset p = face_poset(c);
    EXPECT_TRUE(testing::brute_force_is_simplicial(p));
    EXPECT_TRUE(is_face_poset(p));
    EXPECT_EQ(p.size(), testing::brute_force_faces(c).size());
    EXPECT_EQ(atoms(p).size(), c.vertices().size());
  }
}

TEST(MinimalNonfaces, Examples) {
  EXPECT_TRUE(minimal_nonfaces(complex_of("a*b*c")).empty());
  EXPECT_EQ(minimal_nonfaces(complex_of("a*b*c,b*c*d")), F({{"a", "d"}}));
  EXPECT_EQ(minimal_nonfaces(complex_of("a*b,b*c,a*c")), F({{"a", "b", "c"}}));
}

TEST(MinimalNonfaces, MatchBruteForceProperty) {
  testing::TestRng rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    const SimplicialComplex c = testing::random_complex(rng, 7);
    const auto mn = minimal_nonfaces(c);
    EXPECT_EQ(std::set<Face>(mn.begin(), mn.end()), testing::brute_force_minimal_nonfaces(c));
  }
}

TEST(CliqueComplex, Examples) {
  const std::vector<std::string> v4{"a", "b", "c", "d"};
  EXPECT_EQ(clique_complex(make_graph(v4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).facets(),
            F({{"a", "b", "c", "d"}}));
  EXPECT_EQ(clique_complex(make_graph({"a", "b", "c", "d", "e"}, {})).facets().size(), 5u);
  EXPECT_EQ(clique_complex(make_graph(v4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).facets(),
            F({{"a", "b"}, {"a", "d"}, {"b", "c"}, {"c", "d"}}));
  EXPECT_THROW(make_graph(v4, {{1, 1}}), Error);
  EXPECT_THROW(make_graph(v4, {{0, 9}}), Error);
}

TEST(CliqueComplex, MatchesBruteForceProperty) {
  testing::TestRng rng(53);
  for (int rep = 0; rep < 150; ++rep) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::bernoulli_distribution edge(rep % 5 / 4.0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edge(rng)) edges.emplace_back(i, j);
    const Graph g = make_graph(names, edges);
    const auto facets = clique_complex(g).facets();
    EXPECT_EQ(std::set<Face>(facets.begin(), facets.end()), testing::brute_force_maximal_cliques(g));
  }
}

TEST(ComplexIo, JsonRoundTripAndShorthand) {
  testing::TestRng rng(59);
  for (int rep = 0; rep < 50; ++rep) {
    const SimplicialComplex c = testing::random_complex(rng, 6);
    EXPECT_EQ(complex_from_json(parse_json_text(dump_json(complex_to_json(c)))), c);
  }
  const auto c = complex_from_json(parse_json_text(R"({"facets": [["b","a"], ["c"]]})"));
  EXPECT_EQ(c.vertices(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(complex_from_facet_string("a*b*c,b*c*d"), complex_of("a*b*c,b*c*d"));
  EXPECT_THROW(complex_from_json(parse_json_text(R"({"vertices": ["a"], "facets": [["z"]]})")), LookupError);
  EXPECT_THROW(parse_facet_string("a**b"), ParseError);
}

}  // namespace
}  // namespace sposet
