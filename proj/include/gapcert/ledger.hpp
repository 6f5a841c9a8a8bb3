#pragma once

#include <string>
#include <vector>

#include "gapcert/rational.hpp"

namespace gapcert::ledger {

enum class Boundary { Open, Closed };

// lhs_const + lhs_eta_coeff*eta < rhs_const + rhs_eta_coeff*eta, which holds
// exactly for eta below claimed_threshold.
struct ThresholdClaim {
  std::string name;
  Rational lhs_const;
  Rational lhs_eta_coeff;
  Rational rhs_const;
  Rational rhs_eta_coeff;
  Rational claimed_threshold;
  Boundary boundary = Boundary::Open;  // metadata only
  std::string source;
};

struct VerificationResult {
  std::string name;
  bool pass = false;
  bool threshold_matches = false;
  bool holds_below = false;   // inequality true at tau*(1 - 1/1000)
  bool fails_above = false;   // inequality false at tau*(1 + 1/1000)
  Rational computed_threshold;
  Rational claimed_threshold;
};

/// Exact eta at which the affine inequality stops holding. Throws InputError
/// when the eta coefficients coincide or the inequality loosens as eta grows.
Rational solve_affine_threshold(const Rational& lhs_const, const Rational& lhs_eta_coeff,
                                const Rational& rhs_const, const Rational& rhs_eta_coeff);

/// Strict evaluation of the claim's inequality at a given eta.
bool inequality_holds(const ThresholdClaim& claim, const Rational& eta);

VerificationResult verify_claim(const ThresholdClaim& claim);

const std::vector<ThresholdClaim>& builtin_claims();

/// Upper end of the admissible eta range used by the rest of the pipeline.
Rational eta_cap();

}  // namespace gapcert::ledger
