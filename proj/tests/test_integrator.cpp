#include <doctest.h>

#include <cmath>
#include <random>

#include "gapcert/integrator.hpp"
#include "oracles.hpp"

using namespace gapcert;
using namespace gapcert::integrator;

namespace {

const Rational kCap(22, 3295);

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

long double f_ld(const Point& a) {
  long double p = 1, rest = 1;
  for (const auto& x : a) {
    const long double v = static_cast<long double>(x.get_d());
    p *= v;
    rest -= v;
  }
  return 1.0L / (p * rest);
}

// Independent estimate of 6 * int_E f: Dirichlet sampling inside each cell.
std::pair<double, double> dirichlet_c1(const std::vector<Simplex>& cells, int per_cell, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::exponential_distribution<double> expo(1.0);
  double total = 0, var = 0;
  for (const auto& s : cells) {
    const double vol = polytope::simplex_volume(s).get_d();
    double sum = 0, sq = 0;
    for (int n = 0; n < per_cell; ++n) {
      double w[5], wsum = 0;
      for (double& x : w) wsum += (x = expo(g));
      double a[4] = {0, 0, 0, 0};
      for (int i = 0; i < 5; ++i) {
        for (int k = 0; k < 4; ++k) a[k] += w[i] / wsum * s.vertices[i][k].get_d();
      }
      const double f = 1.0 / (a[0] * a[1] * a[2] * a[3] * (1 - a[0] - a[1] - a[2] - a[3]));
      sum += f;
      sq += f * f;
    }
    const double mean = sum / per_cell;
    total += 6 * vol * mean;
    var += std::pow(6 * vol, 2) * (sq / per_cell - mean * mean) / per_cell;
  }
  return {total, std::sqrt(var)};
}

}  // namespace

TEST_CASE("eval_f at the centre and off-centre points") {
  const Rational fifth(1, 5);
  CHECK(eval_f(pt({fifth, fifth, fifth, fifth})) == 3125);
  const Point a = pt({Rational(3, 10), Rational(1, 5), Rational(1, 5), Rational(1, 10)});
  CHECK(eval_f(a) == Rational(12500, 3));
  CHECK(std::abs(f_ld(a) - 12500.0L / 3) < 1e-9L);

  const Point b = pt({Rational(21, 100), Rational(1, 5), Rational(19, 100), Rational(9, 50)});
  CHECK(std::abs(static_cast<long double>(eval_f(b).get_d()) - f_ld(b)) < 1e-9L * f_ld(b));
  CHECK_THROWS_AS(eval_f(pt({fifth, fifth, fifth})), InputError);
}

TEST_CASE("eval_f reports poles") {
  auto kind_of = [](const Point& p) -> std::pair<PoleError::Kind, int> {
    try {
      eval_f(p);
    } catch (const PoleError& e) {
      return {e.kind(), e.factor()};
    }
    FAIL("no pole raised");
    return {};
  };
  const Rational q(1, 4);
  auto k = kind_of(pt({q, q, q, q}));
  CHECK(k.first == PoleError::Kind::ZeroFactor);
  CHECK(k.second == 4);
  k = kind_of(pt({0, q, q, q}));
  CHECK(k.first == PoleError::Kind::ZeroFactor);
  CHECK(k.second == 0);
  k = kind_of(pt({Rational(1, 2), Rational(1, 2), Rational(1, 10), Rational(1, 10)}));
  CHECK(k.first == PoleError::Kind::NegativeFactor);
  CHECK(k.second == 4);
  k = kind_of(pt({q, q, Rational(-1, 10), q}));
  CHECK(k.first == PoleError::Kind::NegativeFactor);
  CHECK(k.second == 2);
}

TEST_CASE("f_max_bound") {
  CHECK(f_max_bound(0) == 3125);
  CHECK(f_max_bound(kCap) == pow_int(Rational(659, 123), 5));
  CHECK(f_max_bound(kCap) <= 4415);
  CHECK_THROWS_AS(f_max_bound(Rational(1, 10)), InputError);

  const auto E = polytope::build_E(kCap);
  const auto cells = polytope::triangulate(E);
  std::mt19937_64 g(3);
  const Rational bound = f_max_bound(kCap);
  for (int n = 0; n < 1000; ++n) {
    const Point x = oracle::random_in_simplex(g, cells[n % cells.size()], false);
    REQUIRE(polytope::contains(E, x));
    CHECK(eval_f(x) <= bound);
  }
}

TEST_CASE("pointwise enclosure on simplices") {
  const Rational fifth(1, 5);
  Simplex point;
  point.vertices.assign(5, pt({fifth, fifth, fifth, fifth}));
  const auto e = f_enclosure_on_simplex(point);
  CHECK(e.lo == 3125);
  CHECK(e.hi == 3125);

  const auto cells = polytope::triangulate(polytope::build_E(kCap));
  const Rational bound = f_max_bound(kCap);
  std::mt19937_64 g(5);
  for (const auto& s : cells) {
    const auto enc = f_enclosure_on_simplex(s);
    CHECK(enc.hi <= bound);
    for (int n = 0; n < 20; ++n) CHECK(enc.contains(eval_f(oracle::random_in_simplex(g, s, false))));
  }
}

TEST_CASE("integral enclosure on a simplex brackets the centroid rule") {
  for (const auto& s : polytope::triangulate(polytope::build_E(kCap))) {
    const Rational vol = polytope::simplex_volume(s);
    const auto enc = integral_enclosure_on_simplex(s);
    const Rational at_centroid = vol * eval_f(polytope::centroid(s.vertices));
    Rational mean = 0;
    for (const auto& v : s.vertices) mean += eval_f(v);
    mean /= 5;
    CHECK(enc.contains(at_centroid));
    CHECK(enc.hi <= vol * mean);
    CHECK(enc.hi <= vol * f_enclosure_on_simplex(s).hi);
  }
}

TEST_CASE("coarse c1 bound") {
  CHECK(c1_coarse_upper(kCap) < Rational(1, 125000));
  CHECK(c1_coarse_upper(0) == 0);
  Rational prev = 0;
  for (const Rational& eta : {Rational(1, 1000), Rational(1, 500), Rational(1, 250), kCap}) {
    const Rational c = c1_coarse_upper(eta);
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("certified c1 enclosure") {
  const auto zero = c1_enclosure(0, pow10(-8), 64);
  CHECK(zero.enclosure.lo == 0);
  CHECK(zero.enclosure.hi == 0);
  CHECK(zero.converged);

  const auto r = c1_enclosure(kCap, pow10(-8), 64);
  CHECK(r.converged);
  CHECK(r.enclosure.width() <= pow10(-8));
  CHECK(r.enclosure.hi < Rational(1, 125000));
  CHECK(r.enclosure.hi < c1_coarse_upper(kCap));
  CHECK(r.enclosure.lo > 0);
  CHECK(r.method == Method::SimplexEnclosure);
  CHECK(method_name(r.method) == "simplex-enclosure");

  const auto loose = c1_enclosure(kCap, pow10(-7), 64);
  const auto tight = c1_enclosure(kCap, pow10(-9), 64);
  CHECK(tight.converged);
  CHECK(loose.enclosure.contains(tight.enclosure));
  CHECK(tight.enclosure.width() <= loose.enclosure.width());
  CHECK(tight.work >= loose.work);

  const auto [est, se] = dirichlet_c1(polytope::triangulate(polytope::build_E(kCap)), 20000, 17);
  CHECK(est >= tight.enclosure.lo.get_d() - 4 * se);
  CHECK(est <= tight.enclosure.hi.get_d() + 4 * se);

  CHECK_THROWS_AS(c1_enclosure(kCap, 0, 64), InputError);
  CHECK_THROWS_AS(c1_enclosure(kCap, Rational(-1, 10), 64), InputError);
}

TEST_CASE("depth cap stops refinement") {
  const auto r = c1_enclosure(kCap, pow10(-14), 1);
  CHECK_FALSE(r.converged);
  CHECK(r.depth_reached <= 1);
  CHECK(r.enclosure.contains(c1_enclosure(kCap, pow10(-9), 64).enclosure.midpoint()));
}

TEST_CASE("Monte Carlo c1") {
  const auto zero = c1_monte_carlo(0, 1000, 1);
  CHECK(zero.estimate == 0.0);
  const auto a = c1_monte_carlo(kCap, 200000, 9);
  const auto b = c1_monte_carlo(kCap, 200000, 9);
  CHECK(a.estimate == b.estimate);
  CHECK(a.hits == b.hits);
  const auto enc = c1_enclosure(kCap, pow10(-8), 64).enclosure;
  CHECK(std::abs(a.estimate - enc.midpoint().get_d()) <= 4 * a.standard_error + enc.width().get_d());
  CHECK(c1_monte_carlo(kCap, 200000, 10).estimate != a.estimate);
}
