#include <doctest.h>

#include <random>

#include "gapcert/polytope.hpp"
#include "oracles.hpp"

using namespace gapcert;
using namespace gapcert::polytope;

namespace {

const Rational kCap(22, 3295);

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

// Frozen from the exact enumeration; matches the Cramer brute force below.
const char* kEVertices[] = {
    "391/1977 391/1977 391/1977 391/1977", "1/5 1/5 1/5 1/5",
    "134/659 134/659 257/1318 257/1318",   "134/659 134/659 391/1977 391/1977",
    "134/659 134/659 134/659 123/659",     "134/659 134/659 134/659 257/1318",
    "413/1977 391/1977 391/1977 391/1977",
};

// Exact volume of E(22/3295), cross-checked against Lasserre's recursion.
const Rational kEVolume(Rational(14641) / Rational(mpz_class("50921996479470")));

}  // namespace

TEST_CASE("build_E has nine half-spaces and validates eta") {
  CHECK(build_E(kCap).halfspaces.size() == 9);
  CHECK(build_E(kCap).dim == 4);
  CHECK_THROWS_AS(build_E(Rational(1, 10)), InputError);
  CHECK_THROWS_AS(build_E(Rational(-1, 100)), InputError);
  for (const auto& h : build_E(kCap).halfspaces) {
    bool nonzero = false;
    for (const auto& a : h.normal) nonzero = nonzero || a != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("contains") {
  CHECK(contains(unit_simplex(4), pt({Rational(1, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)})));
  CHECK_FALSE(contains(build_E(kCap), pt({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)})));
  CHECK_THROWS_AS(contains(unit_cube(4), pt({0, 0, 0})), InputError);

  // Boundary points are in the closure but not the open region.
  const auto corner = pt({0, 0, 0, 0});
  CHECK(contains(unit_cube(4), corner));
  CHECK_FALSE(contains(unit_cube(4), corner, Strictness::Open));
}

TEST_CASE("centroid of E's vertices is a member") {
  const auto E = build_E(kCap);
  std::vector<Point> pts;
  for (const auto& v : enumerate_vertices(E)) pts.push_back(v.coords);
  const Point c = centroid(pts);
  CHECK(contains(E, c));
  CHECK(contains(E, c, Strictness::Open));
}

TEST_CASE("vertex counts of the reference polytopes") {
  CHECK(enumerate_vertices(unit_cube(4)).size() == 16);
  CHECK(enumerate_vertices(unit_simplex(4)).size() == 5);
  CHECK(enumerate_vertices(unit_cube(2)).size() == 4);
}

TEST_CASE("E(22/3295) vertices match the Cramer brute force and the frozen list") {
  const auto E = build_E(kCap);
  const auto vertices = enumerate_vertices(E);
  const auto brute = oracle::brute_force_vertices(E);
  REQUIRE(vertices.size() == brute.size());
  REQUIRE(vertices.size() == 7);
  std::set<Point> frozen;
  for (const char* line : kEVertices) frozen.insert(parse_hrep(std::string(line) + " <= 0").halfspaces[0].normal);
  for (const auto& v : vertices) {
    CHECK(brute.count(v.coords) == 1);
    CHECK(frozen.count(v.coords) == 1);
    CHECK(contains(E, v.coords));
  }
}

TEST_CASE("unbounded input is detected") {
  HPolytope half;
  half.dim = 2;
  half.halfspaces = {{pt({1, 0}), 1}, {pt({0, 1}), 1}, {pt({0, -1}), 0}};
  CHECK_FALSE(is_bounded(half));
  CHECK_THROWS_AS(enumerate_vertices(half), UnboundedError);
  CHECK_THROWS_AS(exact_volume(half), UnboundedError);
  CHECK(is_bounded(unit_cube(3)));
  CHECK(is_bounded(build_E(kCap)));
  CHECK(is_bounded(build_E(0)));
}

TEST_CASE("triangulations of the cube and simplex") {
  for (const auto& [p, vol] : {std::pair{unit_cube(4), Rational(1)}, std::pair{unit_simplex(4), Rational(1, 24)},
                               std::pair{unit_cube(3), Rational(1)}}) {
    const auto cells = triangulate(p);
    REQUIRE_FALSE(cells.empty());
    Rational sum = 0;
    for (const auto& s : cells) {
      CHECK(s.vertices.size() == p.dim + 1);
      const Rational v = simplex_volume(s);
      CHECK(v > 0);
      sum += v;
    }
    CHECK(sum == vol);
  }
  CHECK(triangulate(unit_simplex(4)).size() == 1);
}

TEST_CASE("degenerate region at eta = 0") {
  CHECK(triangulate(build_E(0)).empty());
  CHECK(exact_volume(build_E(0)) == 0);
  const auto v = enumerate_vertices(build_E(0));
  REQUIRE(v.size() == 1);
  CHECK(v[0].coords == pt({Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5)}));
}

TEST_CASE("exact volumes") {
  CHECK(exact_volume(unit_cube(4)) == 1);
  CHECK(exact_volume(unit_simplex(4)) == Rational(1, 24));
  const Rational vol = exact_volume(build_E(kCap));
  CHECK(vol > 0);
  CHECK(vol <= 3 * pow10(-10));
  CHECK(vol == kEVolume);
}

TEST_CASE("Lasserre's recursion agrees with the triangulation volume") {
  CHECK(oracle::lasserre_volume(unit_cube(4)) == 1);
  CHECK(oracle::lasserre_volume(unit_simplex(4)) == Rational(1, 24));
  for (const Rational& eta : {kCap, Rational(1, 250), Rational(1, 2000), Rational(3, 100)}) {
    CAPTURE(to_string(eta));
    CHECK(oracle::lasserre_volume(build_E(eta)) == exact_volume(build_E(eta)));
  }
}

TEST_CASE("volume is invariant under positive half-space scaling") {
  const auto E = build_E(kCap);
  const Rational base = exact_volume(E);
  for (std::size_t i = 0; i < E.halfspaces.size(); ++i) {
    CHECK(exact_volume(scale_halfspace(E, i, Rational(7, 3))) == base);
  }
  CHECK_THROWS_AS(scale_halfspace(E, 0, 0), InputError);
}

TEST_CASE("constraints relax and volume grows with eta") {
  const auto grid = std::vector<Rational>{0, Rational(1, 1000), Rational(1, 500), Rational(3, 1000),
                                          Rational(1, 250), Rational(1, 200), Rational(3, 500), kCap};
  Rational prev = -1;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Rational v = exact_volume(build_E(grid[k]));
    CHECK(v >= prev);
    prev = v;
    if (k > 0) {
      const auto a = build_E(grid[k - 1]), b = build_E(grid[k]);
      for (std::size_t i = 0; i < a.halfspaces.size(); ++i) {
        CHECK(a.halfspaces[i].normal == b.halfspaces[i].normal);
        CHECK(a.halfspaces[i].offset <= b.halfspaces[i].offset);
      }
    }
  }
}

TEST_CASE("volume scales as eta^4") {
  // alpha = 1/5 + eta x maps E(eta) onto a fixed polytope while eta < 1/10.
  const Rational base = exact_volume(build_E(kCap));
  for (const Rational& eta : {Rational(1, 2000), Rational(1, 1000), Rational(1, 300)}) {
    CHECK(exact_volume(build_E(eta)) == base * pow_int(eta / kCap, 4));
  }
}

TEST_CASE("triangulation partitions E") {
  const auto E = build_E(kCap);
  const auto cells = triangulate(E);
  const Box box = bounding_box(E);
  std::mt19937_64 g(7);
  std::vector<oracle::BarycentricMap> maps;
  for (const auto& s : cells) maps.emplace_back(s);
  int inside = 0;
  for (int n = 0; n < 2000; ++n) {
    const Point x = oracle::random_in_box(g, box);
    int closed = 0, open = 0;
    for (const auto& map : maps) {
      const auto lam = map(x);
      bool in_closed = true, in_open = true;
      for (const auto& l : lam) {
        in_closed = in_closed && l >= 0;
        in_open = in_open && l > 0;
      }
      closed += in_closed;
      open += in_open;
    }
    CHECK(open <= 1);
    if (contains(E, x)) {
      ++inside;
      CHECK(closed >= 1);
    } else {
      CHECK(closed == 0);
    }
  }
  CHECK(inside > 0);
}

TEST_CASE("precomputed barycentric map agrees with Cramer") {
  const auto cells = triangulate(build_E(kCap));
  std::mt19937_64 g(11);
  for (const auto& s : cells) {
    const Point x = oracle::random_in_simplex(g, s);
    CHECK(oracle::BarycentricMap(s)(x) == oracle::barycentric(s, x));
  }
}

TEST_CASE("Monte Carlo volume") {
  const auto cube = mc_volume(unit_cube(4), 100000, 3);
  CHECK(cube.estimate == 1.0);
  CHECK(cube.standard_error == 0.0);

  const auto simplex = mc_volume(unit_simplex(4), 1000000, 3);
  CHECK(std::abs(simplex.estimate - 1.0 / 24.0) <= 4 * simplex.standard_error);

  const auto E = build_E(kCap);
  const auto e = mc_volume(E, 1000000, 5);
  CHECK(std::abs(e.estimate - kEVolume.get_d()) <= 4 * e.standard_error);

  const auto again = mc_volume(E, 1000000, 5);
  CHECK(again.estimate == e.estimate);
  CHECK(again.hits == e.hits);

  const auto empty = mc_volume(build_E(0), 1000, 1);
  CHECK(empty.estimate == 0.0);
  CHECK(empty.standard_error == 0.0);
  CHECK_THROWS_AS(mc_volume(E, 0, 1), InputError);
}

TEST_CASE("H-representation text round-trips") {
  const auto E = build_E(kCap);
  const std::string text = to_hrep(E);
  CHECK(text.find("1/1 0/1 0/1 0/1 <= 268/659\n") == 0);
  const auto back = parse_hrep(text);
  CHECK(back.dim == 4);
  REQUIRE(back.halfspaces.size() == E.halfspaces.size());
  CHECK(to_hrep(back) == text);
  CHECK(exact_volume(back) == exact_volume(E));

  CHECK(parse_hrep("# unit square\n1 0 <= 1\n-1 0 <= 0\n0 1 <= 1\n0 -1 <= 0\n").halfspaces.size() == 4);
  CHECK_THROWS_AS(parse_hrep("1 0 < 1"), InputError);
  CHECK_THROWS_AS(parse_hrep("1 0 <= 1\n1 0 0 <= 1"), InputError);
  CHECK_THROWS_AS(parse_hrep("0 0 <= 1"), InputError);
  CHECK_THROWS_AS(parse_hrep(""), InputError);
}

TEST_CASE("linear algebra helpers") {
  CHECK(linalg::determinant({pt({2, 0}), pt({0, 3})}) == 6);
  CHECK(linalg::determinant({pt({0, 1}), pt({1, 0})}) == -1);
  CHECK(linalg::determinant({pt({1, 2}), pt({2, 4})}) == 0);
  CHECK(linalg::solve({pt({1, 1}), pt({1, -1})}, pt({3, 1})) == pt({2, 1}));
  CHECK(linalg::solve({pt({1, 1}), pt({2, 2})}, pt({3, 1})).empty());
  const Point a = pt({0, 0}), b = pt({1, 1}), c = pt({2, 2});
  CHECK(linalg::affine_rank({&a, &b, &c}) == 1);
}
