#pragma once

#include <random>

#include "gapcert/kernels.hpp"

namespace gapcert::kernels::detail {

inline std::mt19937_64 shard_engine(std::uint64_t seed, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

// 53 random bits in [0, 1).
inline double unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline void draw(std::mt19937_64& gen, const SampleBox& box, double* x) {
  for (std::size_t i = 0; i < box.lo.size(); ++i) x[i] = box.lo[i] + box.width[i] * unit(gen);
}

inline bool inside(const DenseHalfSpaces& h, const double* x) {
  const std::size_t m = h.offsets.size();
  for (std::size_t r = 0; r < m; ++r) {
    double s = 0.0;
    const double* row = h.normals.data() + r * h.dim;
    for (std::size_t i = 0; i < h.dim; ++i) s += row[i] * x[i];
    if (s > h.offsets[r]) return false;
  }
  return true;
}

inline HitCount hits_in_shard(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                              std::uint64_t seed, std::size_t shard) {
  auto gen = shard_engine(seed, shard);
  std::vector<double> x(box.lo.size());
  HitCount c;
  c.samples = shard_samples(n, shard);
  for (std::uint64_t k = 0; k < c.samples; ++k) {
    draw(gen, box, x.data());
    if (inside(h, x.data())) ++c.hits;
  }
  return c;
}

inline IntegrandSums f_in_shard(const DenseHalfSpaces& h, const SampleBox& box, std::uint64_t n,
                                std::uint64_t seed, std::size_t shard) {
  auto gen = shard_engine(seed, shard);
  double x[4];
  IntegrandSums s;
  s.samples = shard_samples(n, shard);
  for (std::uint64_t k = 0; k < s.samples; ++k) {
    draw(gen, box, x);
    if (!inside(h, x)) continue;
    const double rest = 1.0 - x[0] - x[1] - x[2] - x[3];
    const double f = 1.0 / (x[0] * x[1] * x[2] * x[3] * rest);
    s.sum += f;
    s.sum_sq += f * f;
    ++s.hits;
  }
  return s;
}

}  // namespace gapcert::kernels::detail
