#include <gtest/gtest.h>

#include "sposet/error.hpp"
#include "sposet/poset_io.hpp"
#include "sposet/random_model.hpp"
#include "test_support.hpp"

namespace sposet {
namespace {

TEST(Rng, StandardTestVector) {
  Rng rng;  // default seed 5489
  rng.discard(9999);
  EXPECT_EQ(rng(), 9981545732273789042ull);

  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double u = uniform_unit(a);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(u, static_cast<double>(b() >> 11) * 0x1.0p-53);
  }
}

TEST(RandomModelParams, Validation) {
  EXPECT_NO_THROW((RandomModelParams{12, 0.0, 1.0, 0}.validate()));
  EXPECT_THROW((RandomModelParams{0, 0.5, 0.5, 0}.validate()), DomainError);
  EXPECT_THROW((RandomModelParams{13, 0.5, 0.5, 0}.validate()), DomainError);
  EXPECT_THROW((RandomModelParams{5, -0.1, 0.5, 0}.validate()), DomainError);
  EXPECT_THROW((RandomModelParams{5, 0.5, 1.5, 0}.validate()), DomainError);
  EXPECT_EQ(point_names(3), (std::vector<std::string>{"x1", "x2", "x3"}));
}

TEST(ErdosRenyi, Extremes) {
  Rng rng(1);
  EXPECT_TRUE(erdos_renyi_graph(6, 0.0, rng).edges.empty());
  EXPECT_EQ(erdos_renyi_graph(6, 1.0, rng).edges.size(), 15u);
  EXPECT_EQ(kahle_complex(5, 1.0, rng), testing::complex_of("x1*x2*x3*x4*x5"));
  EXPECT_EQ(kahle_complex(4, 0.0, rng), testing::complex_of("x1,x2,x3,x4"));
}

TEST(ErdosRenyi, DrawOrderAndMean) {
  // Edge (i, j) is decided by the k-th word, pairs in lexicographic order.
  Rng rng(123), replay(123);
  const Graph g = erdos_renyi_graph(5, 0.5, rng);
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (uniform_unit(replay) < 0.5) expected.emplace_back(i, j);
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(rng(), replay());

  double total = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Rng r(seed);
    total += static_cast<double>(erdos_renyi_graph(6, 0.5, r).edges.size());
  }
  EXPECT_NEAR(total / 10000.0, 7.5, 0.5);
}

TEST(KahleComplex, FacetsAreMaximalCliquesProperty) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng a(seed), b(seed);
    const std::size_t n = 1 + seed % 8;
    const double p = static_cast<double>(seed % 7) / 6.0;
    const SimplicialComplex c = kahle_complex(n, p, a);
    const Graph g = erdos_renyi_graph(n, p, b);
    const auto facets = c.facets();
    EXPECT_EQ(std::set<Face>(facets.begin(), facets.end()), testing::brute_force_maximal_cliques(g));
  }
}

TEST(RandSimplicialPoset, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t seed : {0u, 9u}) {
      EXPECT_TRUE(are_isomorphic(rand_simplicial_poset({n, 1.0, 1.0, seed}), boolean_lattice(n)));
      const Poset points = rand_simplicial_poset({n, 0.0, 0.0, seed});
      EXPECT_TRUE(are_isomorphic(points, face_poset(make_complex(point_names(n), {}))));
      EXPECT_EQ(points.size(), n + 1);
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Poset p = rand_simplicial_poset({5, 0.75, 0.75, seed});
    EXPECT_TRUE(is_antichain_list(atom_family(p)));
    EXPECT_TRUE(is_face_poset(meet_poset(p)));
  }
}

TEST(RandSimplicialPoset, SampleInvariantsProperty) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const RandomModelParams params{1 + seed % 6, (seed % 5) / 4.0, (seed % 3) / 2.0, seed * 7919};
    const RandomSample s = sample_theta_pair(params);
    EXPECT_TRUE(is_simplicial(s.poset));
    EXPECT_TRUE(testing::brute_force_is_simplicial(s.poset));
    EXPECT_EQ(atoms(s.poset).size(), params.n);
    const ThetaConditions c = check_theta_conditions(s.poset);
    EXPECT_TRUE(c.atom_family_antichain);
    EXPECT_TRUE(c.meet_poset_is_face_poset);
    EXPECT_EQ(s.poset, theta_glue(s.first, s.second));

    // Same stream order: D1 edges first, then D2 edges.
    Rng rng(params.seed);
    EXPECT_EQ(kahle_complex(params.n, params.p1, rng), s.first);
    EXPECT_EQ(kahle_complex(params.n, params.p2, rng), s.second);
  }
}

TEST(RandSimplicialPoset, Deterministic) {
  const RandomModelParams params{6, 0.5, 0.5, 2024};
  EXPECT_EQ(dump_json(poset_to_json(rand_simplicial_poset(params))),
            dump_json(poset_to_json(rand_simplicial_poset(params))));
}

TEST(RunBatch, OrderedAndThreadIndependent) {
  const RandomModelParams params{6, 0.5, 0.5, 7};
  const BatchResult one = run_batch(params, 40, 1);
  const BatchResult many = run_batch(params, 40, 4);
  EXPECT_EQ(dump_json(one.to_json()), dump_json(many.to_json()));
  ASSERT_EQ(one.per_sample.size(), 40u);
  std::size_t count = 0;
  for (std::size_t k = 0; k < 40; ++k) {
    const auto& s = one.per_sample[k];
    EXPECT_EQ(s.seed, 7 + k);
    const Poset p = rand_simplicial_poset({6, 0.5, 0.5, 7 + k});
    EXPECT_EQ(s.is_face_poset, is_face_poset(p));
    EXPECT_EQ(s.elements, p.size());
    EXPECT_EQ(s.atoms, 6u);
    count += s.is_face_poset ? 1 : 0;
  }
  EXPECT_EQ(one.face_poset_count, count);
  const auto j = one.to_json();
  EXPECT_EQ(j.at("samples"), 40);
  EXPECT_EQ(j.at("params").at("n"), 6);
  EXPECT_EQ(run_batch(params, 0).per_sample.size(), 0u);
}

}  // namespace
}  // namespace sposet
