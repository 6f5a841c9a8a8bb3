#pragma once

#include <string>
#include <vector>

#include "gapcert/integrator.hpp"
#include "gapcert/rational.hpp"

namespace gapcert::constants {

struct Check {
  std::string name;
  bool pass = false;
  Rational lhs;
  Rational rhs;
  std::string relation;  // how lhs and rhs must compare for a pass
  std::string anchor;    // the inequality this step checks
};

struct TheoremReport {
  Rational eta;
  bool eta_at_boundary = false;
  Rational theta0;
  Rational c1_upper;
  Rational product_lower;  // theta0 * (1 - c1_upper)
  Rational c0_upper;       // 2 / product_lower
  std::vector<Check> checks;
  bool overall = false;
};

struct ScanRow {
  Rational eta;
  Rational volume;
  Rational c1_upper;
  Rational theta0;
  Rational c0;
};

/// 1/2 + 7/300 + 17 eta / 120
Rational theta0(const Rational& eta);

/// 161/600 - 359 eta / 240
Rational zeta_cut(const Rational& eta);

/// 2 / (theta (1 - c1_upper)); needs 0 < theta < 1 and 0 <= c1_upper < 1.
Rational c0_exponent(const Rational& theta, const Rational& c1_upper);

/// Thresholds of the final chain.
Rational c1_target();       // 8 * 10^-6
Rational product_target();  // 52427 / 100000
Rational exponent_target(); // 3815 / 1000

TheoremReport verify_main_theorem(const Rational& eta, const Rational& c1_upper);

/// Upper bound for c1 by the chosen method. Monte Carlo is not certified and
/// is rejected here.
Rational c1_upper_bound(const Rational& eta, integrator::Method method,
                        const Rational& tol = pow10(-8));

std::vector<ScanRow> scan_eta(const std::vector<Rational>& grid, integrator::Method method,
                              const Rational& tol = pow10(-8));

/// n evenly spaced points from lo to hi inclusive.
std::vector<Rational> even_grid(const Rational& lo, const Rational& hi, int n);

}  // namespace gapcert::constants
