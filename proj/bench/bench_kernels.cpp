// Serial reference vs OpenMP kernels. Usage: bench_kernels [samples] [reps]
// Thread count comes from GAPCERT_THREADS or the OpenMP default.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "gapcert/combinatorics.hpp"
#include "gapcert/kernels.hpp"
#include "gapcert/polytope.hpp"

using namespace gapcert;

static double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

static void row(const char* name, double serial, double par, bool same) {
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, serial, par, serial / par, same ? "identical" : "MISMATCH");
}

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20'000'000;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

  const auto E = polytope::build_E(Rational(22, 3295));
  const auto h = kernels::DenseHalfSpaces::from(E);
  const auto box = kernels::SampleBox::from(polytope::bounding_box(E));

  std::printf("threads=%d samples=%llu reps=%d\n", kernels::worker_count(), static_cast<unsigned long long>(n), reps);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  kernels::HitCount hs, hp;
  double ts = best_of(reps, [&] { hs = kernels::count_hits_serial(h, box, n, 1); });
  double tp = best_of(reps, [&] { hp = kernels::count_hits(h, box, n, 1); });
  row("count_hits", ts, tp, hs.hits == hp.hits);

  kernels::IntegrandSums fs, fp;
  ts = best_of(reps, [&] { fs = kernels::integrate_f_serial(h, box, n, 1); });
  tp = best_of(reps, [&] { fp = kernels::integrate_f(h, box, n, 1); });
  row("integrate_f", ts, tp, fs.sum == fp.sum && fs.sum_sq == fp.sum_sq);

  const Rational eta(1, 1000);
  const combinatorics::SearchLimits lim{n / 200, 0};
  combinatorics::Lemma2Search l2s, l2p;
  ts = best_of(reps, [&] { l2s = combinatorics::falsify_lemma2_serial(eta, 3, 8, lim, 1); });
  tp = best_of(reps, [&] { l2p = combinatorics::falsify_lemma2(eta, 3, 8, lim, 1); });
  row("falsify_lemma2", ts, tp, l2s.stats.draws == l2p.stats.draws && l2s.stats.premise_hits == l2p.stats.premise_hits);

  combinatorics::Lemma3Search l3s, l3p;
  ts = best_of(reps, [&] { l3s = combinatorics::falsify_lemma3_serial(eta, lim, 1); });
  tp = best_of(reps, [&] { l3p = combinatorics::falsify_lemma3(eta, lim, 1); });
  row("falsify_lemma3", ts, tp, l3s.stats.draws == l3p.stats.draws && l3s.stats.premise_hits == l3p.stats.premise_hits);
  return 0;
}
