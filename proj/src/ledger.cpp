#include "gapcert/ledger.hpp"

namespace gapcert::ledger {

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<ThresholdClaim> make_claims() {
  // Auxiliary parameters delta, varpi, sigma enter at their limiting values
  // (delta = 0); every row is affine in eta.
  const Rational varpi_const = q(7, 600);
  const Rational varpi_eta = q(17, 240);
  const Rational zeta_const = q(161, 600);
  const Rational zeta_eta = q(-359, 240);
  const Rational type1_cap_const = q(199, 600);
  const Rational type1_cap_eta = q(119, 240);

  std::vector<ThresholdClaim> claims;
  claims.push_back({"fundlem-alpha3", q(1, 5), q(1, 2), zeta_const, zeta_eta, q(82, 2395),
                    Boundary::Open, "1/5 + eta/2 < 161/600 - 359eta/240 iff eta < 82/2395"});
  claims.push_back({"fundlem-alpha2", q(1, 5), q(4, 3), zeta_const, zeta_eta, q(82, 3395),
                    Boundary::Open, "1/5 + 4eta/3 < 161/600 - 359eta/240 iff eta < 82/3395"});
  claims.push_back({"type1-trivial", q(1, 2) + q(7, 300), q(17, 120), q(3, 5), q(-1), q(46, 685),
                    Boundary::Open, "1/2 + 7/300 + 17eta/120 < 3/5 - eta iff eta < 46/685"});
  claims.push_back({"type2-part-iii", varpi_const, varpi_eta, q(1, 80), q(1, 32), q(2, 95),
                    Boundary::Closed, "7/600 + 17eta/240 <= 1/80 + eta/32 iff eta <= 2/95"});
  claims.push_back({"type2-part-iv", varpi_const, varpi_eta, q(1, 68), q(0), q(62, 1445),
                    Boundary::Closed, "7/600 + 17eta/240 <= 1/68 iff eta <= 62/1445"});
  claims.push_back({"type3", q(1, 18) + q(28, 9) * varpi_const, q(28, 9) * varpi_eta, q(1, 10), q(-1),
                    q(22, 3295), Boundary::Open,
                    "1/18 + (28/9)(7/600 + 17eta/240) < 1/10 - eta iff eta < 22/3295"});
  claims.push_back({"lem2-bound", type1_cap_const, type1_cap_eta, q(2, 5), q(-4), q(82, 5395),
                    Boundary::Closed, "199/600 + 119eta/240 <= 2/5 - 4eta iff eta <= 82/5395"});
  claims.push_back({"rho3", q(1), q(0), q(6, 5), q(-12), q(1, 60), Boundary::Open,
                    "1 < 6/5 - 12eta iff eta < 1/60"});
  claims.push_back({"rho4", q(1), q(0), q(6, 5), q(-7), q(1, 35), Boundary::Open,
                    "1 < 6/5 - 7eta iff eta < 1/35"});
  return claims;
}

}  // namespace

Rational solve_affine_threshold(const Rational& lhs_const, const Rational& lhs_eta_coeff,
                                const Rational& rhs_const, const Rational& rhs_eta_coeff) {
  if (lhs_eta_coeff == rhs_eta_coeff) {
    throw InputError("no threshold: eta coefficients are equal");
  }
  if (lhs_eta_coeff < rhs_eta_coeff) {
    throw InputError("no threshold: inequality does not tighten as eta grows");
  }
  Rational tau = (rhs_const - lhs_const) / (lhs_eta_coeff - rhs_eta_coeff);
  tau.canonicalize();
  return tau;
}

bool inequality_holds(const ThresholdClaim& claim, const Rational& eta) {
  return claim.lhs_const + claim.lhs_eta_coeff * eta < claim.rhs_const + claim.rhs_eta_coeff * eta;
}

VerificationResult verify_claim(const ThresholdClaim& claim) {
  VerificationResult r;
  r.name = claim.name;
  r.claimed_threshold = claim.claimed_threshold;
  r.computed_threshold = solve_affine_threshold(claim.lhs_const, claim.lhs_eta_coeff,
                                                claim.rhs_const, claim.rhs_eta_coeff);
  r.threshold_matches = r.computed_threshold == claim.claimed_threshold;
  const Rational below = r.computed_threshold * Rational(999, 1000);
  const Rational above = r.computed_threshold * Rational(1001, 1000);
  r.holds_below = inequality_holds(claim, below);
  r.fails_above = !inequality_holds(claim, above);
  r.pass = r.threshold_matches && r.holds_below && r.fails_above;
  return r;
}

const std::vector<ThresholdClaim>& builtin_claims() {
  static const std::vector<ThresholdClaim> claims = make_claims();
  return claims;
}

Rational eta_cap() { return q(22, 3295); }

}  // namespace gapcert::ledger
