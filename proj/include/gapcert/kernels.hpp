#pragma once

// Floating-point sampling kernels. Each kernel splits its samples over a fixed
// number of shards with independent generators, so the OpenMP version and the
// serial reference produce bit-identical results for any thread count.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gapcert/polytope.hpp"

namespace gapcert::kernels {

inline constexpr std::size_t kShards = 64;

struct DenseHalfSpaces {
  std::size_t dim = 0;
  std::vector<double> normals;  // row-major, one row per half-space
  std::vector<double> offsets;

  static DenseHalfSpaces from(const HPolytope& p);
};

struct SampleBox {
  std::vector<double> lo;
  std::vector<double> width;

  static SampleBox from(const Box& b);
};

struct HitCount {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

// Sums of g = f * 1_inside over the box samples.
struct IntegrandSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

std::uint64_t shard_samples(std::uint64_t n, std::size_t shard);

HitCount count_hits(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                    std::uint64_t seed);
HitCount count_hits_serial(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                           std::uint64_t seed);

/// Integrand 1/(a1 a2 a3 a4 (1 - a1 - a2 - a3 - a4)) over a 4-d region.
IntegrandSums integrate_f(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                          std::uint64_t seed);
IntegrandSums integrate_f_serial(const DenseHalfSpaces& h, const SampleBox& box,
                                 std::uint64_t n, std::uint64_t seed);

/// Worker count: GAPCERT_THREADS if set, else the OpenMP default.
int worker_count();

}  // namespace gapcert::kernels
