#include "gapcert/integrator.hpp"

#include <array>
#include <cmath>
#include <queue>

#include "gapcert/kernels.hpp"

namespace gapcert::integrator {

namespace {

using Factors = std::array<Rational, 5>;

Factors factors_of(const Point& a) {
  if (a.size() != 4) throw InputError("f is defined on 4-vectors");
  return {a[0], a[1], a[2], a[3], 1 - a[0] - a[1] - a[2] - a[3]};
}

void require_positive(const Factors& f) {
  for (int i = 0; i < 5; ++i) {
    if (f[static_cast<std::size_t>(i)] == 0) throw PoleError(PoleError::Kind::ZeroFactor, i);
    if (f[static_cast<std::size_t>(i)] < 0) throw PoleError(PoleError::Kind::NegativeFactor, i);
  }
}

Rational reciprocal_product(const Factors& f) {
  Rational p = f[0] * f[1] * f[2] * f[3] * f[4];
  return 1 / p;
}

Factors average(const Factors& a, const Factors& b) {
  Factors m;
  for (std::size_t i = 0; i < 5; ++i) m[i] = (a[i] + b[i]) / 2;
  return m;
}

// A simplex with its exact volume and the five factor values at each vertex.
struct Cell {
  std::vector<Point> vertices;
  std::vector<Factors> factors;
  std::vector<Rational> f_values;
  Rational volume;
  Enclosure integral;
  int depth = 0;
};

Enclosure pointwise(const std::vector<Factors>& fs) {
  Factors lo = fs[0], hi = fs[0];
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (f[i] < lo[i]) lo[i] = f[i];
      if (f[i] > hi[i]) hi[i] = f[i];
    }
  }
  require_positive(lo);
  return {reciprocal_product(hi), reciprocal_product(lo)};
}

Enclosure integral_of(const Cell& c) {
  Enclosure box = pointwise(c.factors);
  box.lo *= c.volume;
  box.hi *= c.volume;

  // f is log-convex, hence convex, where every factor is positive: Jensen at
  // the centroid bounds the integral below, the linear interpolant above.
  Factors centre = c.factors[0];
  for (std::size_t v = 1; v < c.factors.size(); ++v) {
    for (std::size_t i = 0; i < 5; ++i) centre[i] += c.factors[v][i];
  }
  const Rational n(static_cast<unsigned long>(c.factors.size()));
  for (auto& x : centre) x /= n;
  Rational mean_f = 0;
  for (const auto& f : c.f_values) mean_f += f;
  mean_f /= n;
  const Rational jensen_lo = c.volume * reciprocal_product(centre);
  const Rational interp_hi = c.volume * mean_f;

  return {jensen_lo > box.lo ? jensen_lo : box.lo, interp_hi < box.hi ? interp_hi : box.hi};
}

Cell make_cell(std::vector<Point> vertices, Rational volume, int depth) {
  Cell c;
  c.vertices = std::move(vertices);
  c.volume = std::move(volume);
  c.depth = depth;
  for (const auto& v : c.vertices) {
    c.factors.push_back(factors_of(v));
    require_positive(c.factors.back());
    c.f_values.push_back(reciprocal_product(c.factors.back()));
  }
  return c;
}

// Dyadic endpoints keep the running sums' denominators bounded.
void round_outward(Enclosure& e, unsigned bits) {
  e.lo = floor_dyadic(e.lo, bits);
  e.hi = ceil_dyadic(e.hi, bits);
}

std::pair<std::size_t, std::size_t> longest_edge(const std::vector<Point>& vs) {
  std::pair<std::size_t, std::size_t> best{0, 1};
  Rational best_len = -1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Rational len = 0;
      for (std::size_t k = 0; k < vs[i].size(); ++k) {
        Rational d = vs[i][k] - vs[j][k];
        len += d * d;
      }
      if (len > best_len) {
        best_len = len;
        best = {i, j};
      }
    }
  }
  return best;
}

// Children share every vertex but one with the parent; only the new midpoint
// needs fresh factor values.
std::array<Cell, 2> bisect(const Cell& parent) {
  const auto [i, j] = longest_edge(parent.vertices);
  Point mid(parent.vertices[i].size());
  for (std::size_t k = 0; k < mid.size(); ++k) {
    mid[k] = (parent.vertices[i][k] + parent.vertices[j][k]) / 2;
  }
  const Factors mid_factors = average(parent.factors[i], parent.factors[j]);
  require_positive(mid_factors);
  const Rational mid_f = reciprocal_product(mid_factors);

  std::array<Cell, 2> kids{parent, parent};
  const std::size_t replaced[2] = {j, i};
  for (std::size_t c = 0; c < 2; ++c) {
    Cell& k = kids[c];
    k.vertices[replaced[c]] = mid;
    k.factors[replaced[c]] = mid_factors;
    k.f_values[replaced[c]] = mid_f;
    k.volume = parent.volume / 2;
    k.depth = parent.depth + 1;
  }
  return kids;
}

struct QueueEntry {
  double width;
  std::uint64_t order;
  std::size_t slot;

  bool operator<(const QueueEntry& o) const {
    if (width != o.width) return width < o.width;
    return order > o.order;
  }
};

}  // namespace

PoleError::PoleError(Kind kind, int factor)
    : std::runtime_error(std::string(kind == Kind::ZeroFactor ? "pole: factor " : "negative factor ") +
                         std::to_string(factor) + (kind == Kind::ZeroFactor ? " is zero" : " is below zero")),
      kind_(kind),
      factor_(factor) {}

std::string method_name(Method m) {
  switch (m) {
    case Method::Coarse: return "coarse";
    case Method::SimplexEnclosure: return "simplex-enclosure";
    case Method::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

Rational eval_f(const Point& alpha) {
  const Factors f = factors_of(alpha);
  require_positive(f);
  return reciprocal_product(f);
}

Rational f_max_bound(const Rational& eta) {
  if (eta >= Rational(1, 10)) throw InputError("f_max_bound needs eta < 1/10");
  return pow_int(Rational(1, 5) - 2 * eta, -5);
}

Enclosure f_enclosure_on_simplex(const Simplex& s) {
  std::vector<Factors> fs;
  for (const auto& v : s.vertices) fs.push_back(factors_of(v));
  for (const auto& f : fs) require_positive(f);
  return pointwise(fs);
}

Enclosure integral_enclosure_on_simplex(const Simplex& s) {
  return integral_of(make_cell(s.vertices, polytope::simplex_volume(s), 0));
}

Rational c1_coarse_upper(const Rational& eta) {
  const Rational bound = f_max_bound(eta);
  return 6 * polytope::exact_volume(polytope::build_E(eta)) * bound;
}

IntegralResult c1_enclosure(const Rational& eta, const Rational& tol, int max_depth,
                            const EnclosureOptions& options) {
  if (tol <= 0) throw InputError("tol must be positive");
  IntegralResult result;
  result.method = Method::SimplexEnclosure;
  const auto simplices = polytope::triangulate(polytope::build_E(eta));
  if (simplices.empty()) {
    result.converged = true;
    return result;
  }

  std::vector<Cell> cells(simplices.size());
#pragma omp parallel for schedule(dynamic) num_threads(kernels::worker_count())
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    cells[i] = make_cell(simplices[i].vertices, polytope::simplex_volume(simplices[i]), 0);
    cells[i].integral = integral_of(cells[i]);
    round_outward(cells[i].integral, options.denominator_bits);
  }

  Rational lo = 0, hi = 0;
  std::priority_queue<QueueEntry> queue;
  std::uint64_t order = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    lo += cells[i].integral.lo;
    hi += cells[i].integral.hi;
    queue.push({cells[i].integral.width().get_d(), order++, i});
  }

  // Target on the unscaled integral.
  const Rational target = tol / 6;
  std::vector<std::size_t> free_slots;
  while (hi - lo > target && !queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    Cell& parent = cells[top.slot];
    if (parent.depth >= max_depth) continue;  // frozen at the depth cap

    auto kids = bisect(parent);
    lo -= parent.integral.lo;
    hi -= parent.integral.hi;
    for (auto& k : kids) {
      k.integral = integral_of(k);
      round_outward(k.integral, options.denominator_bits);
      lo += k.integral.lo;
      hi += k.integral.hi;
      result.depth_reached = std::max(result.depth_reached, k.depth);
    }
    cells[top.slot] = std::move(kids[0]);
    queue.push({cells[top.slot].integral.width().get_d(), order++, top.slot});
    cells.push_back(std::move(kids[1]));
    queue.push({cells.back().integral.width().get_d(), order++, cells.size() - 1});
    ++result.refinements;
  }

  result.enclosure = {6 * lo, 6 * hi};
  result.converged = result.enclosure.width() <= tol;
  result.work = cells.size();
  result.point_estimate = result.enclosure.midpoint().get_d();
  return result;
}

McResult c1_monte_carlo(const Rational& eta, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw InputError("n_samples must be >= 1");
  const auto region = polytope::build_E(eta);
  const Box box = polytope::bounding_box(region);
  McResult r;
  r.samples = n_samples;
  const Rational box_volume = box.volume();
  if (box_volume == 0) return r;
  const auto sums = kernels::integrate_f(kernels::DenseHalfSpaces::from(region),
                                         kernels::SampleBox::from(box), n_samples, seed);
  const double n = static_cast<double>(n_samples);
  const double scale = 6.0 * box_volume.get_d();
  const double mean = sums.sum / n;
  const double var = std::max(0.0, sums.sum_sq / n - mean * mean);
  r.hits = sums.hits;
  r.estimate = scale * mean;
  r.standard_error = scale * std::sqrt(var / n);
  return r;
}

}  // namespace gapcert::integrator
