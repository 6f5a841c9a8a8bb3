#include <cstdlib>
#include <stdexcept>

#include "shard.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gapcert::kernels {

DenseHalfSpaces DenseHalfSpaces::from(const HPolytope& p) {
  DenseHalfSpaces d;
  d.dim = p.dim;
  for (const auto& h : p.halfspaces) {
    for (const auto& a : h.normal) d.normals.push_back(a.get_d());
    d.offsets.push_back(h.offset.get_d());
  }
  return d;
}

SampleBox SampleBox::from(const Box& b) {
  SampleBox s;
  for (std::size_t i = 0; i < b.lo.size(); ++i) {
    s.lo.push_back(b.lo[i].get_d());
    s.width.push_back(Rational(b.hi[i] - b.lo[i]).get_d());
  }
  return s;
}

std::uint64_t shard_samples(std::uint64_t n, std::size_t shard) {
  return n / kShards + (shard < n % kShards ? 1 : 0);
}

int worker_count() {
  if (const char* env = std::getenv("GAPCERT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gapcert::kernels
