#include <doctest.h>

#include "gapcert/constants.hpp"
#include "gapcert/ledger.hpp"
#include "gapcert/polytope.hpp"

using namespace gapcert;
using namespace gapcert::constants;
using integrator::Method;

namespace {
const Rational kCap(22, 3295);

const Check& check_named(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  return r.checks.front();
}
}  // namespace

TEST_CASE("theta0 and zeta_cut") {
  CHECK(theta0(0) == Rational(157, 300));
  CHECK(theta0(kCap) == Rational(691, 1318));
  CHECK(zeta_cut(0) == Rational(161, 600));
  // zeta_cut meets 1/5 + eta/2 exactly at eta = 82/2395.
  const Rational cross(82, 2395);
  CHECK(zeta_cut(cross) == Rational(1, 5) + cross / 2);
  CHECK(zeta_cut(cross - pow10(-6)) > Rational(1, 5) + (cross - pow10(-6)) / 2);
  CHECK(theta0(Rational(1, 100)) > theta0(Rational(1, 1000)));
}

TEST_CASE("c0 exponent") {
  CHECK(c0_exponent(Rational(157, 300), 0) == Rational(600, 157));
  CHECK(c0_exponent(Rational(1, 2), 0) == 4);
  CHECK(c0_exponent(Rational(691, 1318), c1_target()) < Rational(763, 200));
  CHECK_THROWS_AS(c0_exponent(0, 0), InputError);
  CHECK_THROWS_AS(c0_exponent(1, 0), InputError);
  CHECK_THROWS_AS(c0_exponent(Rational(1, 2), 1), InputError);
  CHECK_THROWS_AS(c0_exponent(Rational(1, 2), Rational(-1, 10)), InputError);

  // Decreasing in theta, increasing in c1.
  Rational prev = 100;
  for (int k = 1; k < 10; ++k) {
    const Rational c = c0_exponent(Rational(k, 10), pow10(-3));
    CHECK(c < prev);
    prev = c;
  }
  prev = 0;
  for (int k = 0; k < 10; ++k) {
    const Rational c = c0_exponent(Rational(1, 2), Rational(k, 20));
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("targets") {
  CHECK(c1_target() == Rational(1, 125000));
  CHECK(product_target() == Rational(52427, 100000));
  CHECK(exponent_target() == Rational(763, 200));
  CHECK(2 / product_target() < exponent_target());
}

TEST_CASE("main theorem at the cap") {
  const Rational c1 = c1_upper_bound(kCap, Method::Coarse);
  const auto r = verify_main_theorem(kCap, c1);
  CHECK(r.eta_at_boundary);
  REQUIRE(r.checks.size() == 5);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  CHECK(r.overall);
  CHECK(r.product_lower == Rational(691, 1318) * (1 - c1));
  CHECK(r.c0_upper < Rational(763, 200));

  const auto enc = verify_main_theorem(kCap, c1_upper_bound(kCap, Method::SimplexEnclosure));
  CHECK(enc.overall);
  CHECK(enc.c0_upper < r.c0_upper);
}

TEST_CASE("interior eta passes, out-of-range eta fails") {
  const Rational eta = kCap - pow10(-6);
  const auto r = verify_main_theorem(eta, c1_upper_bound(eta, Method::Coarse));
  CHECK_FALSE(r.eta_at_boundary);
  CHECK(r.overall);

  const Rational above = kCap + pow10(-6);
  const auto bad = verify_main_theorem(above, c1_target() / 2);
  CHECK_FALSE(check_named(bad, "eta-range").pass);
  CHECK_FALSE(bad.overall);
  CHECK_THROWS_AS(verify_main_theorem(Rational(-1, 10), 0), InputError);
}

TEST_CASE("a large c1 fails the c1 check") {
  const auto r = verify_main_theorem(kCap, Rational(1, 100));
  CHECK_FALSE(check_named(r, "c1-upper").pass);
  CHECK_FALSE(r.overall);
}

TEST_CASE("eta = 0 with c1 = 0 fails the product and exponent steps") {
  const auto r = verify_main_theorem(0, 0);
  CHECK(check_named(r, "eta-range").pass);
  CHECK(check_named(r, "c1-upper").pass);
  CHECK_FALSE(check_named(r, "theta-product").pass);
  CHECK_FALSE(check_named(r, "exponent-chain").pass);
  CHECK_FALSE(check_named(r, "c0-exponent").pass);
  CHECK(r.c0_upper == Rational(600, 157));
  CHECK_FALSE(r.overall);
}

TEST_CASE("c1_upper_bound") {
  CHECK(c1_upper_bound(kCap, Method::Coarse) == integrator::c1_coarse_upper(kCap));
  CHECK(c1_upper_bound(kCap, Method::SimplexEnclosure) < c1_upper_bound(kCap, Method::Coarse));
  CHECK_THROWS_AS(c1_upper_bound(kCap, Method::MonteCarlo), InputError);
}

TEST_CASE("scan over eta") {
  const auto zero = scan_eta({0}, Method::Coarse);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].volume == 0);
  CHECK(zero[0].c1_upper == 0);
  CHECK(zero[0].c0 == Rational(600, 157));

  const auto grid = even_grid(0, kCap, 8);
  REQUIRE(grid.size() == 8);
  CHECK(grid.front() == 0);
  CHECK(grid.back() == kCap);
  for (Method m : {Method::Coarse, Method::SimplexEnclosure}) {
    const auto rows = scan_eta(grid, m);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].c0 < rows[i - 1].c0);
      CHECK(rows[i].volume > rows[i - 1].volume);
      CHECK(rows[i].theta0 == theta0(rows[i].eta));
    }
    const auto r = verify_main_theorem(kCap, c1_upper_bound(kCap, m));
    CHECK(rows.back().c0 == r.c0_upper);
    CHECK(rows.back().volume == polytope::exact_volume(polytope::build_E(kCap)));
  }
  CHECK_THROWS_AS(scan_eta({kCap + pow10(-9)}, Method::Coarse), InputError);
  CHECK_THROWS_AS(scan_eta({Rational(-1, 1000)}, Method::Coarse), InputError);
  CHECK_THROWS_AS(even_grid(0, 1, 0), InputError);
  CHECK(even_grid(Rational(1, 3), 1, 1) == std::vector<Rational>{Rational(1, 3)});
}
