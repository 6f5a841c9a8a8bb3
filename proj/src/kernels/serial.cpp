// Reference implementations: plain loops over the shards in order.

#include "shard.hpp"

namespace gapcert::kernels {

HitCount count_hits_serial(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                           std::uint64_t seed) {
  HitCount total;
  for (std::size_t s = 0; s < kShards; ++s) {
    HitCount c = detail::hits_in_shard(h, box, n, seed, s);
    total.hits += c.hits;
    total.samples += c.samples;
  }
  return total;
}

IntegrandSums integrate_f_serial(const DenseHalfSpaces& h, const SampleBox& box,
                                 std::uint64_t n, std::uint64_t seed) {
  IntegrandSums total;
  for (std::size_t s = 0; s < kShards; ++s) {
    IntegrandSums c = detail::f_in_shard(h, box, n, seed, s);
    total.sum += c.sum;
    total.sum_sq += c.sum_sq;
    total.hits += c.hits;
    total.samples += c.samples;
  }
  return total;
}

}  // namespace gapcert::kernels
