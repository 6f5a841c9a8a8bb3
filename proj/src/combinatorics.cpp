#include "gapcert/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gapcert/kernels.hpp"
#include "kernels/shard.hpp"

namespace gapcert::combinatorics {

namespace {

constexpr std::size_t kShards = kernels::kShards;
constexpr double kBoundaryBand = 1e-3;

struct LemmaBounds {
  Rational cap_a;      // 199/600 + 119 eta / 240
  Rational band_lo;    // 2/5 + eta
  Rational band_hi;    // 3/5 - eta
  Rational low;        // 1/5 - 2 eta
  Rational alpha2_cap; // 1/5 + 4 eta / 3

  explicit LemmaBounds(const Rational& eta)
      : cap_a(Rational(199, 600) + Rational(119, 240) * eta),
        band_lo(Rational(2, 5) + eta),
        band_hi(Rational(3, 5) - eta),
        low(Rational(1, 5) - 2 * eta),
        alpha2_cap(Rational(1, 5) + Rational(4, 3) * eta) {}
};

void require_lemma_eta(const Rational& eta) {
  if (eta <= 0 || eta >= Rational(82, 5395)) {
    throw InputError("eta must lie in (0, 82/5395), got " + to_string(eta));
  }
}

// A rational bound b seen from integer numerators S over kSnapDenominator.
struct ScaledBound {
  std::int64_t floor_v;
  std::int64_t ceil_v;

  explicit ScaledBound(const Rational& b) {
    Rational x = b * kSnapDenominator;
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    floor_v = f.get_si();
    ceil_v = c.get_si();
  }
  bool above(std::int64_t s) const { return s < ceil_v; }     // s/D < b
  bool at_most(std::int64_t s) const { return s <= floor_v; } // s/D <= b
  bool below(std::int64_t s) const { return s > floor_v; }    // s/D > b
  bool at_least(std::int64_t s) const { return s >= ceil_v; } // s/D >= b
};

struct ScaledBounds {
  ScaledBound cap_a, band_lo, band_hi, low, alpha2_cap, one_third;

  explicit ScaledBounds(const LemmaBounds& b)
      : cap_a(b.cap_a),
        band_lo(b.band_lo),
        band_hi(b.band_hi),
        low(b.low),
        alpha2_cap(b.alpha2_cap),
        one_third(Rational(1, 3)) {}
};

// Gap-lemma premises and conclusion over any ordered sequence type. `at` is
// 1-based and yields zero past the end; sums go through `add`.
template <typename T, typename At, typename Band, typename Less, typename GreaterEq>
Verdict lemma2_generic(std::size_t t, At at, Band in_band, const T& cap_a, const T& band_lo,
                       const T& low, Less less, GreaterEq geq) {
  Verdict v;
  const bool a = less(at(1), cap_a);
  const bool b = !in_band();
  const bool c = less(at(3), low) || less(at(2) + at(3), band_lo);
  v.premises_hold = a && b && c;
  if (t >= 5) {
    T tail = at(1) + at(2);
    for (std::size_t j = 6; j <= t; ++j) tail = tail + at(j);
    v.conclusion_holds = geq(at(5), low) && less(tail, band_lo);
  }
  return v;
}

bool any_subset_in_band(const std::vector<std::int64_t>& v, const ScaledBounds& b,
                        std::vector<std::int64_t>& scratch) {
  const std::size_t n = std::size_t{1} << v.size();
  scratch.resize(n);
  scratch[0] = 0;
  for (std::size_t mask = 1; mask < n; ++mask) {
    const std::size_t low_bit = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::int64_t s = scratch[mask & (mask - 1)] + v[low_bit];
    scratch[mask] = s;
    if (b.band_lo.at_least(s) && b.band_hi.at_most(s)) return true;
  }
  return false;
}

Verdict lemma2_scaled(const std::vector<std::int64_t>& g, const ScaledBounds& b,
                      std::vector<std::int64_t>& scratch) {
  Verdict v;
  auto at = [&](std::size_t j) -> std::int64_t { return j <= g.size() ? g[j - 1] : 0; };
  if (!b.cap_a.above(at(1))) return v;
  if (!(b.low.above(at(3)) || b.band_lo.above(at(2) + at(3)))) return v;
  if (any_subset_in_band(g, b, scratch)) return v;
  v.premises_hold = true;
  if (g.size() >= 5) {
    std::int64_t tail = at(1) + at(2);
    for (std::size_t j = 6; j <= g.size(); ++j) tail += at(j);
    v.conclusion_holds = b.low.at_least(at(5)) && b.band_lo.above(tail);
  }
  return v;
}

bool partition_valid_scaled(const std::vector<std::int64_t>& beta, std::size_t r, std::size_t s,
                            const ScaledBounds& b) {
  const std::size_t t = beta.size();
  if (r == 0 || s <= r || t <= s) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (beta[i] <= 0) return false;
    const bool group_start = i == 0 || i == r || i == s;
    if (!group_start && beta[i] > beta[i - 1]) return false;
    total += beta[i];
  }
  if (total != kSnapDenominator) return false;
  const std::int64_t a1 = std::accumulate(beta.begin(), beta.begin() + static_cast<long>(r), std::int64_t{0});
  const std::int64_t a2 = std::accumulate(beta.begin() + static_cast<long>(r),
                                          beta.begin() + static_cast<long>(s), std::int64_t{0});
  return b.low.at_least(a2) && a2 < a1 && b.band_lo.above(a1) && b.one_third.at_most(a2);
}

std::optional<Verdict> lemma3_scaled(const std::vector<std::int64_t>& beta, std::size_t r,
                                     std::size_t s, const ScaledBounds& b,
                                     std::vector<std::int64_t>& scratch,
                                     std::vector<std::int64_t>& merged) {
  if (!partition_valid_scaled(beta, r, s, b)) return std::nullopt;
  merged.assign(beta.begin(), beta.end());
  std::sort(merged.begin(), merged.end(), std::greater<>());
  Verdict v = lemma2_scaled(merged, b, scratch);
  const std::int64_t a1 = std::accumulate(beta.begin(), beta.begin() + static_cast<long>(r), std::int64_t{0});
  const std::int64_t a2 = std::accumulate(beta.begin() + static_cast<long>(r),
                                          beta.begin() + static_cast<long>(s), std::int64_t{0});
  v.conclusion_holds =
      b.band_lo.above(a1 + a2) || (b.band_hi.below(a1 + a2) && b.alpha2_cap.above(a2));
  return v;
}

Rational scaled_to_rational(std::int64_t n) {
  Rational q(static_cast<long>(n), static_cast<long>(kSnapDenominator));
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Samplers. Everything here is floating point; verdicts come from the exact
// integer path after snapping.

struct DoubleBounds {
  double eta, cap_a, band_lo, band_hi, low, alpha2_cap;

  explicit DoubleBounds(const LemmaBounds& b, const Rational& e)
      : eta(e.get_d()),
        cap_a(b.cap_a.get_d()),
        band_lo(b.band_lo.get_d()),
        band_hi(b.band_hi.get_d()),
        low(b.low.get_d()),
        alpha2_cap(b.alpha2_cap.get_d()) {}
};

using Engine = std::mt19937_64;

double uniform(Engine& g, double lo, double hi) { return lo + (hi - lo) * kernels::detail::unit(g); }

int uniform_int(Engine& g, int lo, int hi) {
  return lo + static_cast<int>(kernels::detail::unit(g) * (hi - lo + 1));
}

// Dirichlet(1, ..., 1) parts of `total`.
void split_uniform(Engine& g, double total, int parts, std::vector<double>& out) {
  std::vector<double> e(static_cast<std::size_t>(parts));
  double sum = 0.0;
  for (auto& x : e) {
    x = -std::log1p(-kernels::detail::unit(g));
    sum += x;
  }
  for (double x : e) out.push_back(total * x / sum);
}

double spread(Engine& g, double eta) {
  static constexpr double kScales[] = {0.5, 1.0, 2.0, 4.0};
  return kScales[uniform_int(g, 0, 3)] * eta;
}

double fifth(Engine& g, double s) { return 0.2 + uniform(g, -s, s); }

double tail_part(Engine& g, double eta) {
  static constexpr double kScales[] = {0.1, 1.0, 5.0};
  return uniform(g, 0.0, 1.0) * kScales[uniform_int(g, 0, 2)] * eta;
}

void normalize(std::vector<double>& v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= s;
}

// Scales the entries in `pick` to sum to `target` and the rest to fill 1.
bool retarget(std::vector<double>& v, const std::vector<std::size_t>& pick, double target) {
  double picked = 0.0;
  for (auto i : pick) picked += v[i];
  const double others = 1.0 - picked;
  if (picked <= 0.0 || others <= 0.0 || target <= 0.0 || target >= 1.0) return false;
  std::vector<bool> chosen(v.size(), false);
  for (auto i : pick) chosen[i] = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] *= chosen[i] ? target / picked : (1.0 - target) / others;
  }
  return true;
}

// Numerators over kSnapDenominator summing exactly to it; the rounding slack
// goes to entry `absorb`. Empty when an entry would be nonpositive.
std::vector<std::int64_t> snap_all(const std::vector<double>& v, std::size_t absorb) {
  std::vector<std::int64_t> n(v.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    n[i] = std::llround(v[i] * static_cast<double>(kSnapDenominator));
    total += n[i];
  }
  n[absorb] += kSnapDenominator - total;
  for (auto x : n) {
    if (x <= 0) return {};
  }
  return n;
}

std::vector<double> draw_lemma2(Engine& g, Stratum stratum, int t_min, int t_max,
                                const DoubleBounds& b) {
  std::vector<double> v;
  const bool fifths_possible = t_max >= 5;
  if (stratum == Uniform || !fifths_possible) {
    split_uniform(g, 1.0, uniform_int(g, t_min, t_max), v);
    return v;
  }
  const int t = uniform_int(g, std::max(5, t_min), t_max);
  const double s = spread(g, b.eta);
  for (int i = 0; i < 5; ++i) v.push_back(fifth(g, s));
  for (int i = 5; i < t; ++i) v.push_back(tail_part(g, b.eta));
  normalize(v);
  if (stratum == NearFifths) return v;

  std::sort(v.begin(), v.end(), std::greater<>());
  const double d = uniform(g, 0.0, kBoundaryBand);
  bool ok = true;
  switch (uniform_int(g, 0, 3)) {
    case 0: ok = retarget(v, {0}, b.cap_a - d); break;
    case 1: ok = retarget(v, {0, 1}, b.band_lo - d); break;
    case 2: ok = retarget(v, {2, 3, 4}, b.band_hi + d); break;
    default: ok = retarget(v, {4}, b.low + uniform(g, -kBoundaryBand, kBoundaryBand)); break;
  }
  if (!ok) v.clear();
  return v;
}

struct Lemma3Draw {
  std::vector<double> beta;
  std::size_t r = 0, s = 0;
};

void finish_block(Engine& g, std::vector<double>& block, int fifths, double sp, double eta) {
  for (int i = 0; i < fifths; ++i) block.push_back(fifth(g, sp));
  const int smalls = uniform_int(g, 0, 3 - fifths);
  for (int i = 0; i < smalls; ++i) block.push_back(tail_part(g, eta));
}

Lemma3Draw draw_lemma3(Engine& g, Stratum stratum, const DoubleBounds& b) {
  Lemma3Draw d;
  std::vector<double> b1, b2, b3;
  if (stratum == Uniform) {
    const double a1 = uniform(g, b.low, b.band_lo);
    const double a2 = uniform(g, b.low, std::min(a1, 1.0 / 3.0));
    split_uniform(g, a1, uniform_int(g, 1, 3), b1);
    split_uniform(g, a2, uniform_int(g, 1, 3), b2);
    split_uniform(g, 1.0 - a1 - a2, uniform_int(g, 1, 3), b3);
  } else {
    const double sp = spread(g, b.eta);
    const int n1 = uniform_int(g, 1, 2);
    finish_block(g, b1, n1, sp, b.eta);
    finish_block(g, b2, 1, sp, b.eta);
    finish_block(g, b3, 4 - n1, sp, b.eta);
  }
  d.beta = b1;
  d.beta.insert(d.beta.end(), b2.begin(), b2.end());
  d.beta.insert(d.beta.end(), b3.begin(), b3.end());
  d.r = b1.size();
  d.s = b1.size() + b2.size();
  if (stratum == Uniform) return d;
  normalize(d.beta);
  if (stratum == NearFifths) return d;

  std::vector<std::size_t> g1(d.r), g2(d.s - d.r), g12(d.s);
  std::iota(g1.begin(), g1.end(), 0);
  std::iota(g2.begin(), g2.end(), d.r);
  std::iota(g12.begin(), g12.end(), 0);
  const double delta = uniform(g, 0.0, kBoundaryBand);
  bool ok = true;
  switch (uniform_int(g, 0, 3)) {
    case 0: ok = retarget(d.beta, g2, b.alpha2_cap + uniform(g, -kBoundaryBand, kBoundaryBand)); break;
    case 1: ok = retarget(d.beta, g12, b.band_lo - delta); break;
    case 2: ok = retarget(d.beta, g12, b.band_hi + delta); break;
    default: {
      const auto big = static_cast<std::size_t>(
          std::max_element(d.beta.begin(), d.beta.end()) - d.beta.begin());
      ok = retarget(d.beta, {big}, b.cap_a - delta);
      break;
    }
  }
  if (!ok) d.beta.clear();
  return d;
}

Stratum stratum_for(std::uint64_t draw) {
  switch (draw % 4) {
    case 0: return Uniform;
    case 3: return Boundary;
    default: return NearFifths;
  }
}

std::uint64_t draw_cap(const SearchLimits& limits) {
  return limits.max_draws ? limits.max_draws : 1000 * limits.n_samples;
}

struct Lemma2Shard {
  std::optional<std::vector<std::int64_t>> counterexample;
  FalsifyStats stats;
};

Lemma2Shard lemma2_shard(const Rational& eta, const LemmaBounds& lb, int t_min, int t_max,
                         const SearchLimits& limits, std::uint64_t seed, std::size_t shard) {
  const ScaledBounds sb(lb);
  const DoubleBounds db(lb, eta);
  auto g = kernels::detail::shard_engine(seed, shard);
  const std::uint64_t target = kernels::shard_samples(limits.n_samples, shard);
  const std::uint64_t cap = kernels::shard_samples(draw_cap(limits), shard);
  std::vector<std::int64_t> scratch;
  Lemma2Shard out;
  auto& st = out.stats;
  while (st.premise_hits < target && st.draws < cap) {
    const Stratum stratum = stratum_for(st.draws);
    ++st.draws;
    ++st.stratum_draws[stratum];
    auto v = draw_lemma2(g, stratum, t_min, t_max, db);
    if (v.empty()) {
      ++st.invalid_draws;
      continue;
    }
    const auto largest = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    auto nums = snap_all(v, largest);
    if (nums.empty()) {
      ++st.invalid_draws;
      continue;
    }
    std::sort(nums.begin(), nums.end(), std::greater<>());
    const Verdict verdict = lemma2_scaled(nums, sb, scratch);
    if (!verdict.premises_hold) continue;
    ++st.premise_hits;
    ++st.stratum_hits[stratum];
    if (!verdict.conclusion_holds) {
      out.counterexample = nums;
      break;
    }
  }
  st.target_reached = st.premise_hits >= target;
  return out;
}

struct Lemma3Shard {
  std::optional<std::pair<std::vector<std::int64_t>, std::pair<std::size_t, std::size_t>>> counterexample;
  FalsifyStats stats;
};

Lemma3Shard lemma3_shard(const Rational& eta, const LemmaBounds& lb, const SearchLimits& limits,
                         std::uint64_t seed, std::size_t shard) {
  const ScaledBounds sb(lb);
  const DoubleBounds db(lb, eta);
  auto g = kernels::detail::shard_engine(seed, shard);
  const std::uint64_t target = kernels::shard_samples(limits.n_samples, shard);
  const std::uint64_t cap = kernels::shard_samples(draw_cap(limits), shard);
  std::vector<std::int64_t> scratch, merged;
  Lemma3Shard out;
  auto& st = out.stats;
  while (st.premise_hits < target && st.draws < cap) {
    const Stratum stratum = stratum_for(st.draws);
    ++st.draws;
    ++st.stratum_draws[stratum];
    auto d = draw_lemma3(g, stratum, db);
    if (d.beta.empty()) {
      ++st.invalid_draws;
      continue;
    }
    auto nums = snap_all(d.beta, d.s);  // slack into the third block
    if (nums.empty()) {
      ++st.invalid_draws;
      continue;
    }
    std::sort(nums.begin(), nums.begin() + static_cast<long>(d.r), std::greater<>());
    std::sort(nums.begin() + static_cast<long>(d.r), nums.begin() + static_cast<long>(d.s),
              std::greater<>());
    std::sort(nums.begin() + static_cast<long>(d.s), nums.end(), std::greater<>());
    const auto verdict = lemma3_scaled(nums, d.r, d.s, sb, scratch, merged);
    if (!verdict) {
      ++st.invalid_draws;
      continue;
    }
    if (!verdict->premises_hold) continue;
    ++st.premise_hits;
    ++st.stratum_hits[stratum];
    if (!verdict->conclusion_holds) {
      out.counterexample = {nums, {d.r, d.s}};
      break;
    }
  }
  st.target_reached = st.premise_hits >= target;
  return out;
}

void accumulate(FalsifyStats& total, const FalsifyStats& part) {
  total.draws += part.draws;
  total.premise_hits += part.premise_hits;
  total.invalid_draws += part.invalid_draws;
  total.exact_disagreements += part.exact_disagreements;
  for (std::size_t k = 0; k < kStrata; ++k) {
    total.stratum_draws[k] += part.stratum_draws[k];
    total.stratum_hits[k] += part.stratum_hits[k];
  }
}

void check_lemma2_args(const Rational& eta, int t_min, int t_max) {
  require_lemma_eta(eta);
  if (t_min < 3 || t_min > t_max || t_max > 10) {
    throw InputError("need 3 <= t_min <= t_max <= 10");
  }
}

// Shards reduced in order; the first shard holding a counterexample wins and
// its candidate must survive the exact Rational re-check.
Lemma2Search merge_lemma2(const std::vector<Lemma2Shard>& parts, const Rational& eta) {
  Lemma2Search out;
  bool all_reached = true;
  for (const auto& p : parts) {
    accumulate(out.stats, p.stats);
    all_reached = all_reached && p.stats.target_reached;
    if (p.counterexample && !out.counterexample) {
      std::vector<Rational> values;
      for (auto n : *p.counterexample) values.push_back(scaled_to_rational(n));
      OrderedTuple gamma = OrderedTuple::from(std::move(values));
      const Verdict exact = lemma2_check(gamma, eta);
      if (exact.premises_hold && !exact.conclusion_holds) {
        out.counterexample = std::move(gamma);
      } else {
        ++out.stats.exact_disagreements;
      }
    }
  }
  out.stats.target_reached = all_reached;
  return out;
}

Lemma3Search merge_lemma3(const std::vector<Lemma3Shard>& parts, const Rational& eta) {
  Lemma3Search out;
  bool all_reached = true;
  for (const auto& p : parts) {
    accumulate(out.stats, p.stats);
    all_reached = all_reached && p.stats.target_reached;
    if (p.counterexample && !out.counterexample) {
      PartitionedTuple pt;
      for (auto n : p.counterexample->first) pt.beta.push_back(scaled_to_rational(n));
      pt.r = p.counterexample->second.first;
      pt.s = p.counterexample->second.second;
      const Verdict exact = lemma3_check(pt, eta);
      if (exact.premises_hold && !exact.conclusion_holds) {
        out.counterexample = std::move(pt);
      } else {
        ++out.stats.exact_disagreements;
      }
    }
  }
  out.stats.target_reached = all_reached;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t count_pattern_permutations(const Arrangement& values,
                                         const std::function<bool(const Arrangement&)>& accept) {
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (values[i] == values[j]) throw InputError("pattern counting needs five distinct values");
    }
  }
  std::array<std::size_t, 5> idx{0, 1, 2, 3, 4};
  std::uint64_t count = 0;
  do {
    Arrangement b;
    for (std::size_t k = 0; k < 5; ++k) b[k] = values[idx[k]];
    if (accept(b)) ++count;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return count;
}

std::uint64_t count_pattern_permutations(const Arrangement& values, Pattern pattern) {
  switch (pattern) {
    case Pattern::P1:
      return count_pattern_permutations(values, [](const Arrangement& b) {
        return b[0] > b[1] && b[1] > b[2] && b[2] > b[3] && b[3] < b[4];
      });
    case Pattern::P2:
      return count_pattern_permutations(values, [](const Arrangement& b) {
        return b[0] > b[1] && b[1] < b[2] && b[3] < b[4];
      });
    case Pattern::Any:
      break;
  }
  return count_pattern_permutations(values, [](const Arrangement&) { return true; });
}

Rational OrderedTuple::at(std::size_t j) const {
  return j >= 1 && j <= values.size() ? values[j - 1] : Rational(0);
}

OrderedTuple OrderedTuple::from(std::vector<Rational> values) {
  for (const auto& v : values) {
    if (v <= 0) throw InputError("tuple entries must be positive");
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return OrderedTuple{std::move(values)};
}

Rational PartitionedTuple::alpha1() const {
  Rational a = 0;
  for (std::size_t i = 0; i < r && i < beta.size(); ++i) a += beta[i];
  return a;
}

Rational PartitionedTuple::alpha2() const {
  Rational a = 0;
  for (std::size_t i = r; i < s && i < beta.size(); ++i) a += beta[i];
  return a;
}

OrderedTuple PartitionedTuple::merged() const { return OrderedTuple::from(beta); }

bool subset_sum_gap_free(const OrderedTuple& gamma, const Rational& eta) {
  const std::size_t t = gamma.size();
  if (t > kMaxSubsetTuple) throw InputError("subset enumeration limited to 20 entries");
  const Rational lo = Rational(2, 5) + eta;
  const Rational hi = Rational(3, 5) - eta;
  const std::size_t n = std::size_t{1} << t;
  std::vector<Rational> sums(n);
  for (std::size_t mask = 1; mask < n; ++mask) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(mask));
    sums[mask] = sums[mask & (mask - 1)] + gamma.values[bit];
    if (lo <= sums[mask] && sums[mask] <= hi) return false;
  }
  return true;
}

Verdict lemma2_check(const OrderedTuple& gamma, const Rational& eta) {
  require_lemma_eta(eta);
  Rational total = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma.values[i] <= 0 || (i > 0 && gamma.values[i] > gamma.values[i - 1])) {
      throw InputError("gamma must be positive and nonincreasing");
    }
    total += gamma.values[i];
  }
  if (total != 1) throw InputError("gamma must sum to 1");
  const LemmaBounds b(eta);
  return lemma2_generic<Rational>(
      gamma.size(), [&](std::size_t j) { return gamma.at(j); },
      [&] { return !subset_sum_gap_free(gamma, eta); }, b.cap_a, b.band_lo, b.low,
      [](const Rational& x, const Rational& y) { return x < y; },
      [](const Rational& x, const Rational& y) { return x >= y; });
}

void validate_partition(const PartitionedTuple& pt, const Rational& eta) {
  require_lemma_eta(eta);
  const std::size_t t = pt.beta.size();
  if (pt.r == 0 || pt.s <= pt.r || t <= pt.s) throw InputError("each group must be nonempty");
  Rational total = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (pt.beta[i] <= 0) throw InputError("beta entries must be positive");
    const bool group_start = i == 0 || i == pt.r || i == pt.s;
    if (!group_start && pt.beta[i] > pt.beta[i - 1]) {
      throw InputError("each group must be nonincreasing");
    }
    total += pt.beta[i];
  }
  if (total != 1) throw InputError("groups must sum to 1");
  const LemmaBounds b(eta);
  const Rational a1 = pt.alpha1(), a2 = pt.alpha2();
  if (!(b.low <= a2 && a2 < a1 && a1 < b.band_lo)) {
    throw InputError("need 1/5 - 2eta <= alpha2 < alpha1 < 2/5 + eta");
  }
  if (a2 > Rational(1, 3)) throw InputError("need alpha2 <= 1/3");
}

Verdict lemma3_check(const PartitionedTuple& pt, const Rational& eta) {
  validate_partition(pt, eta);
  Verdict v = lemma2_check(pt.merged(), eta);
  const LemmaBounds b(eta);
  const Rational sum = pt.alpha1() + pt.alpha2();
  v.conclusion_holds = sum < b.band_lo || (sum > b.band_hi && pt.alpha2() < b.alpha2_cap);
  return v;
}

Verdict lemma2_check_scaled(const std::vector<std::int64_t>& nums_desc, const Rational& eta) {
  require_lemma_eta(eta);
  std::vector<std::int64_t> scratch;
  return lemma2_scaled(nums_desc, ScaledBounds(LemmaBounds(eta)), scratch);
}

std::optional<Verdict> lemma3_check_scaled(const std::vector<std::int64_t>& beta_nums,
                                           std::size_t r, std::size_t s, const Rational& eta) {
  require_lemma_eta(eta);
  std::vector<std::int64_t> scratch, merged;
  return lemma3_scaled(beta_nums, r, s, ScaledBounds(LemmaBounds(eta)), scratch, merged);
}

Lemma2Search falsify_lemma2(const Rational& eta, int t_min, int t_max, SearchLimits limits,
                            std::uint64_t seed) {
  check_lemma2_args(eta, t_min, t_max);
  const LemmaBounds lb(eta);
  std::vector<Lemma2Shard> parts(kShards);
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::worker_count())
  for (std::size_t s = 0; s < kShards; ++s) {
    parts[s] = lemma2_shard(eta, lb, t_min, t_max, limits, seed, s);
  }
  return merge_lemma2(parts, eta);
}

Lemma2Search falsify_lemma2_serial(const Rational& eta, int t_min, int t_max,
                                   SearchLimits limits, std::uint64_t seed) {
  check_lemma2_args(eta, t_min, t_max);
  const LemmaBounds lb(eta);
  std::vector<Lemma2Shard> parts;
  for (std::size_t s = 0; s < kShards; ++s) {
    parts.push_back(lemma2_shard(eta, lb, t_min, t_max, limits, seed, s));
  }
  return merge_lemma2(parts, eta);
}

Lemma3Search falsify_lemma3(const Rational& eta, SearchLimits limits, std::uint64_t seed) {
  require_lemma_eta(eta);
  const LemmaBounds lb(eta);
  std::vector<Lemma3Shard> parts(kShards);
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::worker_count())
  for (std::size_t s = 0; s < kShards; ++s) {
    parts[s] = lemma3_shard(eta, lb, limits, seed, s);
  }
  return merge_lemma3(parts, eta);
}

Lemma3Search falsify_lemma3_serial(const Rational& eta, SearchLimits limits, std::uint64_t seed) {
  require_lemma_eta(eta);
  const LemmaBounds lb(eta);
  std::vector<Lemma3Shard> parts;
  for (std::size_t s = 0; s < kShards; ++s) {
    parts.push_back(lemma3_shard(eta, lb, limits, seed, s));
  }
  return merge_lemma3(parts, eta);
}

}  // namespace gapcert::combinatorics
