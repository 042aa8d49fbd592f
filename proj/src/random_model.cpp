#include "sposet/random_model.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "sposet/error.hpp"
#include "sposet/gluing.hpp"

namespace sposet {

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void RandomModelParams::validate() const {
  if (n < 1 || n > kMaxRandomPoints) {
    throw DomainError("n must lie in [1, " + std::to_string(kMaxRandomPoints) + "]");
  }
  auto probability = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!probability(p1) || !probability(p2)) throw DomainError("probabilities must lie in [0, 1]");
}

std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Graph erdos_renyi_graph(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    }
  }
  return make_graph(point_names(n), std::move(edges));
}

SimplicialComplex kahle_complex(std::size_t n, double p, Rng& rng) {
  return clique_complex(erdos_renyi_graph(n, p, rng));
}

RandomSample sample_theta_pair(const RandomModelParams& params) {
  params.validate();
  Rng rng(params.seed);
  SimplicialComplex first = kahle_complex(params.n, params.p1, rng);
  SimplicialComplex second = kahle_complex(params.n, params.p2, rng);
  Poset poset = theta_glue(first, second);
  return RandomSample{std::move(first), std::move(second), std::move(poset)};
}

Poset rand_simplicial_poset(const RandomModelParams& params) {
  return sample_theta_pair(params).poset;
}

nlohmann::json BatchResult::to_json() const {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : per_sample) {
    samples.push_back({{"seed", s.seed},
                       {"is_face_poset", s.is_face_poset},
                       {"atoms", s.atoms},
                       {"elements", s.elements}});
  }
  return {{"params", {{"n", params.n}, {"p1", params.p1}, {"p2", params.p2}, {"seed", params.seed}}},
          {"samples", per_sample.size()},
          {"face_poset_count", face_poset_count},
          {"per_sample", std::move(samples)}};
}

BatchResult run_batch(const RandomModelParams& params, std::size_t count, unsigned threads) {
  params.validate();
  BatchResult result{params, std::vector<SampleSummary>(count), 0};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        RandomModelParams sample = params;
        sample.seed = params.seed + k;
        const Poset p = rand_simplicial_poset(sample);
        result.per_sample[k] = {sample.seed, is_face_poset(p), p.atom_indices().size(), p.size()};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  for (const auto& s : result.per_sample) result.face_poset_count += s.is_face_poset ? 1 : 0;
  return result;
}

}  // namespace sposet
