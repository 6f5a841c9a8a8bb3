#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gapcert/rational.hpp"

namespace gapcert::combinatorics {

enum class Pattern {
  P1,   // b1 > b2 > b3 > b4 and b4 < b5
  P2,   // b1 > b2, b2 < b3 and b4 < b5
  Any,  // every permutation
};

using Arrangement = std::array<double, 5>;

/// Exhaustive count over the 120 arrangements of five distinct values.
std::uint64_t count_pattern_permutations(const Arrangement& values, Pattern pattern);
std::uint64_t count_pattern_permutations(const Arrangement& values,
                                         const std::function<bool(const Arrangement&)>& accept);

// gamma_1 >= ... >= gamma_t > 0
struct OrderedTuple {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  /// 1-based; zero past the end.
  Rational at(std::size_t j) const;
  /// Sorts nonincreasing; throws on nonpositive entries.
  static OrderedTuple from(std::vector<Rational> values);
};

// beta split into three groups [0, r), [r, s), [s, t) summing to alpha1,
// alpha2 and 1 - alpha1 - alpha2.
struct PartitionedTuple {
  std::vector<Rational> beta;
  std::size_t r = 0;
  std::size_t s = 0;

  Rational alpha1() const;
  Rational alpha2() const;
  OrderedTuple merged() const;
};

struct Verdict {
  bool premises_hold = false;
  bool conclusion_holds = false;
};

inline constexpr std::size_t kMaxSubsetTuple = 20;

/// No nonempty subset sum lies in the closed band [2/5 + eta, 3/5 - eta].
bool subset_sum_gap_free(const OrderedTuple& gamma, const Rational& eta);

/// Needs 0 < eta < 82/5395 and sum(gamma) == 1.
Verdict lemma2_check(const OrderedTuple& gamma, const Rational& eta);

/// Throws InputError when the partition violates its structural constraints.
Verdict lemma3_check(const PartitionedTuple& pt, const Rational& eta);

/// Validates the structure lemma3_check requires.
void validate_partition(const PartitionedTuple& pt, const Rational& eta);

enum Stratum : std::size_t { Uniform = 0, NearFifths = 1, Boundary = 2, kStrata = 3 };

struct FalsifyStats {
  std::uint64_t draws = 0;
  std::uint64_t premise_hits = 0;
  std::uint64_t invalid_draws = 0;      // rejected before the premise check
  std::uint64_t exact_disagreements = 0;  // fast path vs exact re-check
  std::array<std::uint64_t, kStrata> stratum_draws{};
  std::array<std::uint64_t, kStrata> stratum_hits{};
  bool target_reached = false;
};

struct Lemma2Search {
  std::optional<OrderedTuple> counterexample;
  FalsifyStats stats;
};

struct Lemma3Search {
  std::optional<PartitionedTuple> counterexample;
  FalsifyStats stats;
};

// n_samples counts premise-satisfying draws; max_draws = 0 means
// 1000 * n_samples. Sampled reals are snapped to denominator 10^6.
struct SearchLimits {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t max_draws = 0;
};

inline constexpr std::int64_t kSnapDenominator = 1'000'000;

Lemma2Search falsify_lemma2(const Rational& eta, int t_min, int t_max, SearchLimits limits,
                            std::uint64_t seed);
Lemma2Search falsify_lemma2_serial(const Rational& eta, int t_min, int t_max,
                                   SearchLimits limits, std::uint64_t seed);

Lemma3Search falsify_lemma3(const Rational& eta, SearchLimits limits, std::uint64_t seed);
Lemma3Search falsify_lemma3_serial(const Rational& eta, SearchLimits limits, std::uint64_t seed);

/// Integer-numerator evaluation over kSnapDenominator; exposed so tests can
/// compare it against the Rational path.
Verdict lemma2_check_scaled(const std::vector<std::int64_t>& nums_desc, const Rational& eta);
/// nullopt when the partition is structurally invalid.
std::optional<Verdict> lemma3_check_scaled(const std::vector<std::int64_t>& beta_nums,
                                           std::size_t r, std::size_t s, const Rational& eta);

}  // namespace gapcert::combinatorics
