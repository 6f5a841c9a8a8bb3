#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapcert/rational.hpp"

namespace gapcert {

// normal . x <= offset
struct HalfSpace {
  Point normal;
  Rational offset;
};

struct HPolytope {
  std::size_t dim = 0;
  std::vector<HalfSpace> halfspaces;
};

struct Vertex {
  Point coords;
};

struct Simplex {
  std::vector<Point> vertices;  // dim + 1 points
};

struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

struct Box {
  Point lo;
  Point hi;

  Rational volume() const;
};

struct VolumeEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

class UnboundedError : public std::runtime_error {
 public:
  UnboundedError() : std::runtime_error("unbounded") {}
};

namespace polytope {

enum class Strictness { Closed, Open };

/// Closure of the discarded sieve region E(eta) in (alpha1..alpha4). Nine
/// half-spaces; requires 0 <= eta < 1/10.
HPolytope build_E(const Rational& eta);

/// [0,1]^dim
HPolytope unit_cube(std::size_t dim);
/// x_i >= 0, sum x_i <= 1
HPolytope unit_simplex(std::size_t dim);

/// Multiplies one half-space (normal and offset) by a positive factor.
HPolytope scale_halfspace(const HPolytope& p, std::size_t index, const Rational& factor);

/// Exact membership. Strictness::Open tests the interior of each half-space.
bool contains(const HPolytope& p, const Point& point, Strictness mode = Strictness::Closed);

/// True when the recession cone {d : A d <= 0} is trivial.
bool is_bounded(const HPolytope& p);

std::vector<Vertex> enumerate_vertices(const HPolytope& p);

/// Cone-from-centroid triangulation over recursively triangulated facets.
/// Empty when the polytope has no interior.
std::vector<Simplex> triangulate(const HPolytope& p);

/// |det(edge matrix)| / d!
Rational simplex_volume(const Simplex& s);

Rational exact_volume(const HPolytope& p);

/// Bounding box of the exact vertex set. Empty polytope gives a dim-0 box.
Box bounding_box(const HPolytope& p);

Point centroid(const std::vector<Point>& points);

/// Rejection sampling over the vertex bounding box; deterministic per seed.
VolumeEstimate mc_volume(const HPolytope& p, std::uint64_t n_samples, std::uint64_t seed);

/// One line per half-space: "a1 a2 ... ad <= b" with p/q rationals.
std::string to_hrep(const HPolytope& p);
HPolytope parse_hrep(std::string_view text);

}  // namespace polytope

namespace linalg {

/// Exact determinant by fraction-based elimination.
Rational determinant(std::vector<Point> rows);

/// Unique solution of A x = b, or empty when A is singular.
std::vector<Rational> solve(std::vector<Point> a, Point b);

/// Affine dimension of a point set (-1 for the empty set).
int affine_rank(const std::vector<const Point*>& points);

}  // namespace linalg

}  // namespace gapcert
