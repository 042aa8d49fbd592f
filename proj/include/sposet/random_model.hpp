#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "sposet/poset.hpp"
#include "sposet/simplicial_complex.hpp"

namespace sposet {

// Random source: std::mt19937_64 seeded with the 64-bit seed.  Each Bernoulli
// draw consumes one output word w and succeeds iff (w >> 11) * 2^-53 < p.
using Rng = std::mt19937_64;

double uniform_unit(Rng& rng);

inline constexpr std::size_t kMaxRandomPoints = 12;

struct RandomModelParams {
  std::size_t n = 1;
  double p1 = 0.5;
  double p2 = 0.5;
  std::uint64_t seed = 0;

  // Throws DomainError unless 1 <= n <= 12 and both probabilities lie in [0, 1].
  void validate() const;
};

// Vertex names x1..xn.
std::vector<std::string> point_names(std::size_t n);

// Pairs (i, j), i < j, are drawn in lexicographic order.
Graph erdos_renyi_graph(std::size_t n, double p, Rng& rng);

SimplicialComplex kahle_complex(std::size_t n, double p, Rng& rng);

struct RandomSample {
  SimplicialComplex first;   // Kahle complex with p1, drawn first
  SimplicialComplex second;  // Kahle complex with p2, drawn next from the same stream
  Poset poset;               // theta_glue(first, second)
};

RandomSample sample_theta_pair(const RandomModelParams& params);
Poset rand_simplicial_poset(const RandomModelParams& params);

struct SampleSummary {
  std::uint64_t seed;
  bool is_face_poset;
  std::size_t atoms;
  std::size_t elements;
};

struct BatchResult {
  RandomModelParams params;
  std::vector<SampleSummary> per_sample;
  std::size_t face_poset_count = 0;

  nlohmann::json to_json() const;
};

// Sample k uses seed params.seed + k.  Samples may run on several threads
// (0 = hardware concurrency); results are ordered by sample index either way.
BatchResult run_batch(const RandomModelParams& params, std::size_t count, unsigned threads = 0);

}  // namespace sposet
