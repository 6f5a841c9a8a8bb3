#include "gapcert/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gapcert/kernels.hpp"

namespace gapcert {

namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Calls fn with each k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t rank_of(std::vector<Point> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

void require_dim(const HPolytope& p, const Point& x) {
  if (x.size() != p.dim) throw InputError("point dimension does not match polytope");
}

class Triangulator {
 public:
  Triangulator(const HPolytope& p, const std::vector<Vertex>& vertices)
      : vertices_(vertices), tight_(p.halfspaces.size()) {
    for (std::size_t h = 0; h < p.halfspaces.size(); ++h) {
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (dot(p.halfspaces[h].normal, vertices[v].coords) == p.halfspaces[h].offset) {
          tight_[h].push_back(v);
        }
      }
    }
  }

  // Appends simplices (as point lists of size face_dim + 1) covering the face.
  void run(const std::vector<std::size_t>& face, int face_dim, std::vector<std::vector<Point>>& out) {
    if (face_dim == 0) {
      out.push_back({vertices_[face[0]].coords});
      return;
    }
    if (face.size() == static_cast<std::size_t>(face_dim) + 1) {
      std::vector<Point> cell;
      for (auto v : face) cell.push_back(vertices_[v].coords);
      out.push_back(std::move(cell));
      return;
    }
    std::vector<Point> pts;
    for (auto v : face) pts.push_back(vertices_[v].coords);
    const Point apex = polytope::centroid(pts);

    std::set<std::vector<std::size_t>> seen;
    for (const auto& tight : tight_) {
      std::vector<std::size_t> sub;
      std::set_intersection(face.begin(), face.end(), tight.begin(), tight.end(),
                            std::back_inserter(sub));
      if (sub.size() < static_cast<std::size_t>(face_dim) || sub.size() == face.size()) continue;
      if (!seen.insert(sub).second) continue;
      std::vector<const Point*> sub_pts;
      for (auto v : sub) sub_pts.push_back(&vertices_[v].coords);
      if (linalg::affine_rank(sub_pts) != face_dim - 1) continue;
      std::vector<std::vector<Point>> cells;
      run(sub, face_dim - 1, cells);
      for (auto& cell : cells) {
        cell.insert(cell.begin(), apex);
        out.push_back(std::move(cell));
      }
    }
  }

 private:
  const std::vector<Vertex>& vertices_;
  std::vector<std::vector<std::size_t>> tight_;
};

}  // namespace

Rational Box::volume() const {
  if (lo.empty()) return 0;
  Rational v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

namespace linalg {

Rational determinant(std::vector<Point> rows) {
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && rows[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(rows[c], rows[pivot]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[c][c];
      for (std::size_t j = c; j < n; ++j) rows[r][j] -= factor * rows[c][j];
    }
  }
  return det;
}

std::vector<Rational> solve(std::vector<Point> a, Point b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational factor = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= factor * a[c][j];
      b[r] -= factor * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

int affine_rank(const std::vector<const Point*>& points) {
  if (points.empty()) return -1;
  std::vector<Point> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point d(points[i]->size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = (*points[i])[j] - (*points[0])[j];
    rows.push_back(std::move(d));
  }
  return static_cast<int>(rank_of(std::move(rows)));
}

}  // namespace linalg

namespace polytope {

HPolytope build_E(const Rational& eta) {
  if (eta < 0 || eta >= Rational(1, 10)) {
    throw InputError("eta must lie in [0, 1/10), got " + to_string(eta));
  }
  const Rational upper = Rational(2, 5) + eta;       // 2/5 + eta
  const Rational lower = Rational(1, 5) - 2 * eta;   // 1/5 - 2 eta
  const Rational triple = Rational(3, 5) - eta;      // 3/5 - eta
  auto hs = [](long a1, long a2, long a3, long a4, Rational b) {
    return HalfSpace{{Rational(a1), Rational(a2), Rational(a3), Rational(a4)}, std::move(b)};
  };
  HPolytope e;
  e.dim = 4;
  e.halfspaces = {
      hs(1, 0, 0, 0, upper),           // a1 <= 2/5 + eta
      hs(-1, 1, 0, 0, 0),              // a2 <= a1
      hs(0, -1, 1, 0, 0),              // a3 <= a2
      hs(0, 0, -1, 1, 0),              // a4 <= a3
      hs(0, 0, 0, -1, -lower),         // a4 >= 1/5 - 2 eta
      hs(1, 1, 1, 2, 1),               // a1 + a2 + a3 + 2 a4 <= 1
      hs(1, 1, 0, 0, upper),           // a1 + a2 <= 2/5 + eta
      hs(0, -1, -1, -1, -triple),      // a2 + a3 + a4 >= 3/5 - eta
      hs(1, 1, 1, 1, 1),               // 1 - a1 - a2 - a3 - a4 >= 0
  };
  return e;
}

HPolytope unit_cube(std::size_t dim) {
  HPolytope p;
  p.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    Point up(dim, Rational(0)), down(dim, Rational(0));
    up[i] = 1;
    down[i] = -1;
    p.halfspaces.push_back({up, 1});
    p.halfspaces.push_back({down, 0});
  }
  return p;
}

HPolytope unit_simplex(std::size_t dim) {
  HPolytope p;
  p.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    Point down(dim, Rational(0));
    down[i] = -1;
    p.halfspaces.push_back({down, 0});
  }
  p.halfspaces.push_back({Point(dim, Rational(1)), 1});
  return p;
}

HPolytope scale_halfspace(const HPolytope& p, std::size_t index, const Rational& factor) {
  if (factor <= 0) throw InputError("half-space scale factor must be positive");
  HPolytope out = p;
  auto& h = out.halfspaces.at(index);
  for (auto& a : h.normal) a *= factor;
  h.offset *= factor;
  return out;
}

bool contains(const HPolytope& p, const Point& point, Strictness mode) {
  require_dim(p, point);
  for (const auto& h : p.halfspaces) {
    Rational lhs = dot(h.normal, point);
    if (mode == Strictness::Closed ? lhs > h.offset : lhs >= h.offset) return false;
  }
  return true;
}

bool is_bounded(const HPolytope& p) {
  // A nonzero recession direction, normalised to sum_i s_i d_i = 1 inside some
  // orthant s, would be a vertex of a bounded slice; search every orthant.
  const std::size_t d = p.dim;
  const std::size_t m = p.halfspaces.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Point> rows;
    for (const auto& h : p.halfspaces) rows.push_back(h.normal);
    Point sign(d);
    for (std::size_t i = 0; i < d; ++i) {
      sign[i] = (mask >> i) & 1 ? -1 : 1;
      Point r(d, Rational(0));
      r[i] = -sign[i];
      rows.push_back(std::move(r));
    }
    bool found = false;
    for_each_combination(m + d, d - 1, [&](const std::vector<std::size_t>& pick) {
      if (found) return;
      std::vector<Point> a;
      Point b;
      for (auto i : pick) {
        a.push_back(rows[i]);
        b.push_back(0);
      }
      a.push_back(sign);
      b.push_back(1);
      auto x = linalg::solve(a, b);
      if (x.empty()) return;
      for (const auto& r : rows) {
        if (dot(r, x) > 0) return;
      }
      found = true;
    });
    if (found) return false;
  }
  return true;
}

std::vector<Vertex> enumerate_vertices(const HPolytope& p) {
  if (!is_bounded(p)) throw UnboundedError();
  std::set<Point, PointLess> found;
  for_each_combination(p.halfspaces.size(), p.dim, [&](const std::vector<std::size_t>& pick) {
    std::vector<Point> a;
    Point b;
    for (auto i : pick) {
      a.push_back(p.halfspaces[i].normal);
      b.push_back(p.halfspaces[i].offset);
    }
    auto x = linalg::solve(std::move(a), std::move(b));
    if (!x.empty() && contains(p, x)) found.insert(std::move(x));
  });
  std::vector<Vertex> out;
  for (const auto& v : found) out.push_back({v});
  return out;
}

Point centroid(const std::vector<Point>& points) {
  Point c(points.at(0).size(), Rational(0));
  for (const auto& pt : points) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += pt[i];
  }
  const Rational n(static_cast<unsigned long>(points.size()));
  for (auto& x : c) x /= n;
  return c;
}

std::vector<Simplex> triangulate(const HPolytope& p) {
  const auto vertices = enumerate_vertices(p);
  if (vertices.size() < p.dim + 1) return {};
  std::vector<const Point*> pts;
  for (const auto& v : vertices) pts.push_back(&v.coords);
  const int dim = linalg::affine_rank(pts);
  if (dim < static_cast<int>(p.dim)) return {};

  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<Point>> cells;
  Triangulator(p, vertices).run(all, dim, cells);

  std::vector<Simplex> out;
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back({std::move(c)});
  return out;
}

Rational simplex_volume(const Simplex& s) {
  const std::size_t d = s.vertices.size() - 1;
  std::vector<Point> edges;
  for (std::size_t i = 1; i <= d; ++i) {
    Point e(d);
    for (std::size_t j = 0; j < d; ++j) e[j] = s.vertices[i][j] - s.vertices[0][j];
    edges.push_back(std::move(e));
  }
  Rational det = linalg::determinant(std::move(edges));
  return abs(det) / factorial(d);
}

Rational exact_volume(const HPolytope& p) {
  const auto cells = triangulate(p);
  std::vector<Rational> parts(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(kernels::worker_count())
  for (std::size_t i = 0; i < cells.size(); ++i) parts[i] = simplex_volume(cells[i]);
  Rational total = 0;
  for (const auto& v : parts) total += v;
  return total;
}

Box bounding_box(const HPolytope& p) {
  const auto vertices = enumerate_vertices(p);
  Box b;
  if (vertices.empty()) return b;
  b.lo = vertices[0].coords;
  b.hi = vertices[0].coords;
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < p.dim; ++i) {
      if (v.coords[i] < b.lo[i]) b.lo[i] = v.coords[i];
      if (v.coords[i] > b.hi[i]) b.hi[i] = v.coords[i];
    }
  }
  return b;
}

VolumeEstimate mc_volume(const HPolytope& p, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw InputError("n_samples must be >= 1");
  const Box box = bounding_box(p);
  const Rational box_volume = box.volume();
  VolumeEstimate est;
  est.samples = n_samples;
  if (box_volume == 0) return est;
  const auto counts = kernels::count_hits(kernels::DenseHalfSpaces::from(p),
                                          kernels::SampleBox::from(box), n_samples, seed);
  const double bv = box_volume.get_d();
  const double rate = static_cast<double>(counts.hits) / static_cast<double>(n_samples);
  est.hits = counts.hits;
  est.estimate = bv * rate;
  est.standard_error = bv * std::sqrt(rate * (1.0 - rate) / static_cast<double>(n_samples));
  return est;
}

std::string to_hrep(const HPolytope& p) {
  std::ostringstream os;
  for (const auto& h : p.halfspaces) {
    for (const auto& a : h.normal) os << to_string(a) << ' ';
    os << "<= " << to_string(h.offset) << '\n';
  }
  return os.str();
}

HPolytope parse_hrep(std::string_view text) {
  HPolytope p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() < 3 || words[words.size() - 2] != "<=") {
      throw InputError("hrep line " + std::to_string(lineno) + ": expected 'a1 .. ad <= b'");
    }
    const std::size_t dim = words.size() - 2;
    if (p.dim == 0) p.dim = dim;
    if (dim != p.dim) throw InputError("hrep line " + std::to_string(lineno) + ": dimension mismatch");
    HalfSpace h;
    bool nonzero = false;
    for (std::size_t i = 0; i < dim; ++i) {
      h.normal.push_back(parse_rational(words[i]));
      nonzero = nonzero || h.normal.back() != 0;
    }
    if (!nonzero) throw InputError("hrep line " + std::to_string(lineno) + ": zero normal");
    h.offset = parse_rational(words.back());
    p.halfspaces.push_back(std::move(h));
  }
  if (p.dim == 0) throw InputError("hrep: no half-spaces");
  return p;
}

}  // namespace polytope

}  // namespace gapcert
