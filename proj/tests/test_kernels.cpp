#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "gapcert/kernels.hpp"

using namespace gapcert;
using namespace gapcert::kernels;

namespace {
struct ThreadEnv {
  explicit ThreadEnv(const char* n) { setenv("GAPCERT_THREADS", n, 1); }
  ~ThreadEnv() { unsetenv("GAPCERT_THREADS"); }
};
}  // namespace

TEST_CASE("shard sizes add up") {
  for (std::uint64_t n : {0ull, 1ull, 63ull, 64ull, 65ull, 1000003ull}) {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < kShards; ++s) total += shard_samples(n, s);
    CHECK(total == n);
  }
}

TEST_CASE("worker_count honours GAPCERT_THREADS") {
  {
    ThreadEnv env("3");
    CHECK(worker_count() == 3);
  }
  CHECK(worker_count() >= 1);
}

TEST_CASE("OpenMP kernels match the serial reference bit for bit") {
  const auto E = polytope::build_E(Rational(22, 3295));
  const auto h = DenseHalfSpaces::from(E);
  const auto box = SampleBox::from(polytope::bounding_box(E));
  const auto cube = DenseHalfSpaces::from(polytope::unit_cube(4));
  const auto cube_box = SampleBox::from(polytope::bounding_box(polytope::unit_cube(4)));

  const auto ref_hits = count_hits_serial(h, box, 300001, 77);
  const auto ref_f = integrate_f_serial(h, box, 300001, 77);
  const auto ref_cube = count_hits_serial(cube, cube_box, 5000, 1);
  CHECK(ref_cube.hits == 5000);
  CHECK(ref_hits.samples == 300001);
  CHECK(ref_f.hits == ref_hits.hits);
  CHECK(ref_hits.hits > 0);

  for (const char* threads : {"1", "2", "3", "8"}) {
    ThreadEnv env(threads);
    CAPTURE(threads);
    const auto hits = count_hits(h, box, 300001, 77);
    CHECK(hits.hits == ref_hits.hits);
    CHECK(hits.samples == ref_hits.samples);
    const auto f = integrate_f(h, box, 300001, 77);
    CHECK(f.sum == ref_f.sum);
    CHECK(f.sum_sq == ref_f.sum_sq);
    CHECK(f.hits == ref_f.hits);
    CHECK(count_hits(cube, cube_box, 5000, 1).hits == 5000);
  }
  CHECK(count_hits(h, box, 300001, 78).hits != ref_hits.hits);
}

TEST_CASE("dense conversion keeps the half-spaces") {
  const auto E = polytope::build_E(Rational(1, 200));
  const auto h = DenseHalfSpaces::from(E);
  CHECK(h.dim == 4);
  CHECK(h.offsets.size() == 9);
  CHECK(h.normals.size() == 36);
  CHECK(h.offsets[0] == doctest::Approx(0.405));
}
