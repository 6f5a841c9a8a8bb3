#include "gapcert/constants.hpp"

#include "gapcert/ledger.hpp"
#include "gapcert/polytope.hpp"

namespace gapcert::constants {

Rational theta0(const Rational& eta) {
  Rational t = Rational(1, 2) + Rational(7, 300) + Rational(17, 120) * eta;
  t.canonicalize();
  return t;
}

Rational zeta_cut(const Rational& eta) {
  Rational z = Rational(161, 600) - Rational(359, 240) * eta;
  z.canonicalize();
  return z;
}

Rational c0_exponent(const Rational& theta, const Rational& c1_upper) {
  if (theta <= 0 || theta >= 1) throw InputError("theta must lie in (0, 1)");
  if (c1_upper < 0 || c1_upper >= 1) throw InputError("c1_upper must lie in [0, 1)");
  Rational c0 = 2 / (theta * (1 - c1_upper));
  c0.canonicalize();
  return c0;
}

Rational c1_target() { return 8 * pow10(-6); }
Rational product_target() { return Rational(52427, 100000); }
Rational exponent_target() { return Rational(763, 200); }

TheoremReport verify_main_theorem(const Rational& eta, const Rational& c1_upper) {
  if (eta < 0) throw InputError("eta must be nonnegative");
  TheoremReport r;
  r.eta = eta;
  r.eta_at_boundary = eta == ledger::eta_cap();
  r.theta0 = theta0(eta);
  r.c1_upper = c1_upper;
  r.product_lower = r.theta0 * (1 - c1_upper);
  r.c0_upper = c0_exponent(r.theta0, c1_upper);

  const Rational two_over_target = 2 / product_target();
  const bool product_ok = r.product_lower > product_target();

  r.checks.push_back({"eta-range", eta <= ledger::eta_cap(), eta, ledger::eta_cap(), "<=",
                      "0 <= eta <= 22/3295"});
  r.checks.push_back({"c1-upper", c1_upper < c1_target(), c1_upper, c1_target(), "<",
                      "c_1(22/3295) < 6 x 3 x 10^-10 x 4415 < 8 x 10^-6"});
  r.checks.push_back({"theta-product", product_ok, r.product_lower, product_target(), ">",
                      "theta(eta)(1 - c_1(eta)) > 0.52427"});
  // Only meaningful once the product bound holds: 2/product < 2/0.52427.
  r.checks.push_back({"exponent-chain", product_ok && two_over_target < exponent_target(),
                      two_over_target, exponent_target(), "<", "2/0.52427 < 3.815"});
  r.checks.push_back({"c0-exponent", r.c0_upper < exponent_target(), r.c0_upper,
                      exponent_target(), "<", "c_0 > 2m/(theta(1 - c_1)) per unit m"});

  r.overall = true;
  for (const auto& c : r.checks) r.overall = r.overall && c.pass;
  return r;
}

Rational c1_upper_bound(const Rational& eta, integrator::Method method, const Rational& tol) {
  switch (method) {
    case integrator::Method::Coarse:
      return integrator::c1_coarse_upper(eta);
    case integrator::Method::SimplexEnclosure:
      return integrator::c1_enclosure(eta, tol, 64).enclosure.hi;
    case integrator::Method::MonteCarlo:
      break;
  }
  throw InputError("monte-carlo estimates are not certified upper bounds");
}

std::vector<ScanRow> scan_eta(const std::vector<Rational>& grid, integrator::Method method,
                              const Rational& tol) {
  for (const auto& eta : grid) {
    if (eta < 0 || eta > ledger::eta_cap()) {
      throw InputError("scan grid point " + to_string(eta) + " outside [0, 22/3295]");
    }
  }
  std::vector<ScanRow> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ScanRow& row = rows[i];
    row.eta = grid[i];
    row.volume = polytope::exact_volume(polytope::build_E(grid[i]));
    row.c1_upper = c1_upper_bound(grid[i], method, tol);
    row.theta0 = theta0(grid[i]);
    row.c0 = c0_exponent(row.theta0, row.c1_upper);
  }
  return rows;
}

std::vector<Rational> even_grid(const Rational& lo, const Rational& hi, int n) {
  if (n < 1) throw InputError("grid needs at least one point");
  if (n == 1) return {lo};
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    Rational x = lo + (hi - lo) * Rational(i, n - 1);
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

}  // namespace gapcert::constants
