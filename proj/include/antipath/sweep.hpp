#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antipath/antipath.hpp"

namespace antipath {

/// Serial is the reference; Parallel shards indices over OpenMP threads and
/// merges per-index results in index order, so both produce identical reports.
enum class Execution { Serial, Parallel };

struct SweepFailure {
  std::uint64_t index = 0;  ///< enumeration index or trial number
  std::uint64_t seed = 0;   ///< derived per-trial seed (0 for enumeration)
  int k = 0;
  Orientation orientation = Orientation::ForwardFirst;
  bool dense = false;
  bool trust_hypothesis = false;
  std::string message;
  std::string graph_text;  ///< canonical graph file contents, replayable

  bool operator==(const SweepFailure&) const = default;
};

struct SweepReport {
  std::string mode;
  std::uint64_t instances = 0;  ///< graphs examined
  std::uint64_t checks = 0;     ///< individual property checks
  std::uint64_t found = 0;
  std::uint64_t not_guaranteed = 0;
  std::uint64_t violations = 0;        ///< HypothesisViolation outcomes seen
  std::uint64_t false_violations = 0;  ///< of which the recomputed degrees disagree
  std::uint64_t skipped = 0;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty() && false_violations == 0; }
  void merge(const SweepReport& other);
  std::string summary() const;

  bool operator==(const SweepReport&) const = default;
};

/// Every oriented graph on n vertices, both orientations: Found whenever
/// pseudo-semidegree >= (3k-2)/4, every Found validated and confirmed by the
/// oracle, and graphs below the bound rerun with trust_hypothesis so that any
/// violation is checked for honesty.
SweepReport sweep_exhaustive_find(int n, int k, Execution exec);

/// Every oriented graph on n vertices and every k <= max_k with
/// pseudo-semidegree >= k/2: a longest antipath shorter than k has odd length.
SweepReport sweep_exhaustive_longest(int n, int max_k, Execution exec);

/// Random tournaments (every tenth trial a shuffled rotational one when n is
/// odd); k is the largest value >= 3 allowed by the degree bound. Each result
/// goes through certificate text, parsing and verification.
SweepReport sweep_random_tournaments(int n, int trials, std::uint64_t seed, Execution exec);

/// Random oriented graphs with more than (3k-4)n/2 edges through the
/// edge-density driver, verified via certificates.
SweepReport sweep_dense(int n, int k, int trials, std::uint64_t seed, Execution exec);

}  // namespace antipath
