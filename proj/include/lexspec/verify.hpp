#pragma once

// Randomized and constructive verification: seeded observable generation,
// the bound-saturating family, synthetic pathological resolutions, and the
// aggregated theorem suite.

#include "lexspec/charpoints.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lexspec {

/// SplitMix64: 64-bit state advanced by 0x9E3779B97F4A7C15; output is the
/// state passed through the xor-shift-multiply finalizer
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31).
/// The sequence is fully defined, so seeds reproduce on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Independent stream for trial `index` of a run seeded with `seed`.
SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index);

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  int k_min = 1, k_max = 6;
  int d_min = 1, d_max = 2;
  int n_min = 2, n_max = 2;
  int max_atoms = 12;
  /// Coordinates are p/q with 1 <= q <= bound and |p/q| <= coord_range.
  int coord_denominator_bound = 2;
  int coord_range = 6;
  /// Infinitesimal components are drawn from [-range, range].
  int infinitesimal_range = 3;
  /// Every atom gets height >= 1 (at most k atoms).
  bool positive_heights = false;
  /// Worker threads for run_suite; 0 picks the hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

DiscreteObservable random_observable(const TrialConfig& config, std::uint64_t index);

/// k atoms of weight (1; 0) on the antichain (1,k), (2,k-1), ..., (k,1).
DiscreteObservable saturating_family(int k);

enum class PathologyShape {
  /// Integer staircase corners (j, m + 1 - j).
  Staircase,
  /// Bounded antichain (1 - 2^-j, 2^-j) shrinking toward a corner.
  ShrinkingAntichain,
};

/// Step F equal to (1; 0) on the union of the open orthants above m
/// antichain corners, to 1 above their componentwise maximum, 0 elsewhere.
/// T_1 has a characteristic point at every corner and at every inner corner
/// (x_i, y_j) of the staircase.
StepResolution pathological_family(int m, int k, PathologyShape shape = PathologyShape::Staircase);

/// Resolution whose T_0-adjoined block infima sum to 1 while F is not the
/// resolution of the observable they define (height-0 mass sits in T_0).
StepResolution mismatch_resolution();

struct CheckCounter {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  friend bool operator==(const CheckCounter&, const CheckCounter&) = default;
};

struct TrialFailure {
  std::uint64_t index = 0;
  std::string check;
  std::string detail;

  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

struct Summary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::map<std::string, CheckCounter> checks;
  std::vector<TrialFailure> failures;

  std::size_t failure_count() const { return failures.size(); }
  /// Associative merge; failures stay ordered by trial index.
  void merge(const Summary& other);

  friend bool operator==(const Summary&, const Summary&) = default;
};

/// Names of the checks run_suite reports on.
const std::vector<std::string>& suite_checks();

/// Runs every check on one observable; `rng` drives the random regions.
Summary run_trial(const DiscreteObservable& x, SplitMix64& rng, std::uint64_t index);

Summary run_suite(const TrialConfig& config);

/// True iff every atom of x sits at the characteristic point of a
/// T_0-adjoined block of its resolution.
bool atoms_at_adjoined_points(const DiscreteObservable& x, const BlockReport& report);

}  // namespace lexspec
