#include <array>

#include "shard.hpp"

namespace gapcert::kernels {

// Shard results land in fixed slots and are reduced in shard order, so the
// floating-point sums match the serial reference exactly.

HitCount count_hits(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                    std::uint64_t seed) {
  std::array<HitCount, kShards> parts{};
  const int workers = worker_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::size_t s = 0; s < kShards; ++s) {
    parts[s] = detail::hits_in_shard(h, box, n, seed, s);
  }
  HitCount total;
  for (const auto& c : parts) {
    total.hits += c.hits;
    total.samples += c.samples;
  }
  return total;
}

IntegrandSums integrate_f(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                          std::uint64_t seed) {
  std::array<IntegrandSums, kShards> parts{};
  const int workers = worker_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::size_t s = 0; s < kShards; ++s) {
    parts[s] = detail::f_in_shard(h, box, n, seed, s);
  }
  IntegrandSums total;
  for (const auto& c : parts) {
    total.sum += c.sum;
    total.sum_sq += c.sum_sq;
    total.hits += c.hits;
    total.samples += c.samples;
  }
  return total;
}

}  // namespace gapcert::kernels
