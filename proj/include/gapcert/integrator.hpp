#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gapcert/polytope.hpp"

namespace gapcert::integrator {

// Raised when one of the five factors a1, a2, a3, a4, 1 - sum(a) is not
// strictly positive.
class PoleError : public std::runtime_error {
 public:
  enum class Kind { ZeroFactor, NegativeFactor };

  PoleError(Kind kind, int factor);

  Kind kind() const { return kind_; }
  int factor() const { return factor_; }  // 0..4

 private:
  Kind kind_;
  int factor_;
};

enum class Method { Coarse, SimplexEnclosure, MonteCarlo };

std::string method_name(Method m);

struct IntegralResult {
  Enclosure enclosure;
  double point_estimate = 0.0;
  Method method = Method::SimplexEnclosure;
  std::uint64_t work = 0;         // final cell count
  std::uint64_t refinements = 0;  // bisections performed
  int depth_reached = 0;
  bool converged = false;         // width <= tol
};

struct McResult {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

struct EnclosureOptions {
  // Per-cell enclosure endpoints are rounded outward to multiples of
  // 2^-denominator_bits.
  unsigned denominator_bits = 128;
};

/// f(a) = 1 / (a1 a2 a3 a4 (1 - a1 - a2 - a3 - a4)), exactly.
Rational eval_f(const Point& alpha);

/// (1/5 - 2 eta)^-5; each factor of f is at least 1/5 - 2 eta on E(eta).
Rational f_max_bound(const Rational& eta);

/// Pointwise enclosure of f on a simplex from the factor ranges at its vertices.
Enclosure f_enclosure_on_simplex(const Simplex& s);

/// Enclosure of the integral of f over a simplex: the pointwise bound times the
/// volume, intersected with the convexity bracket
/// [vol * f(centroid), vol * mean_i f(v_i)].
Enclosure integral_enclosure_on_simplex(const Simplex& s);

/// 6 * vol(E(eta)) * f_max_bound(eta).
Rational c1_coarse_upper(const Rational& eta);

/// Certified enclosure of 6 * int_{E(eta)} f by worst-first longest-edge
/// bisection. Stops at width <= tol; cells at max_depth are not split further.
IntegralResult c1_enclosure(const Rational& eta, const Rational& tol, int max_depth,
                            const EnclosureOptions& options = {});

/// 6 * box_volume * mean(f * 1_E) over uniform samples of the vertex box.
McResult c1_monte_carlo(const Rational& eta, std::uint64_t n_samples, std::uint64_t seed);

}  // namespace gapcert::integrator
