#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "antipath/antipath.hpp"
#include "antipath/digraph.hpp"

namespace antipath {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("BudgetExhausted: oracle search exceeded its node-expansion budget") {}
};

struct OracleResult {
  int max_length = 0;
  std::optional<AntiPath> witness;  ///< empty only for the 0-vertex graph
  /// realized[o][L] for L = 0..max_length: some antipath of length L has orientation o.
  std::array<std::vector<bool>, 2> realized;
  bool exact = true;  ///< false when the budget ran out; max_length is then a lower bound
  std::uint64_t expansions = 0;

  bool realizes(int length, Orientation o) const;
};

/// Exhaustive depth-first search over alternating paths from every start
/// vertex (ascending) and both initial directions (forward first).
OracleResult longest_antipath(const OrientedGraph& d, std::uint64_t budget = kDefaultBudget);

/// Exact decision: is there an antipath of length k with the given orientation?
/// Throws BudgetExhausted when the search cannot finish within the budget.
bool has_antipath(const OrientedGraph& d, int k, Orientation orient, std::uint64_t budget = kDefaultBudget);

class EnumerationTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All labeled oriented graphs on n vertices, addressed by index so that the
/// range can be sharded. Pairs (u,v), u < v, are taken in lexicographic order;
/// pair p is base-3 digit p of the index (0: absent, 1: u -> v, 2: v -> u).
class OrientedGraphEnumerator {
 public:
  explicit OrientedGraphEnumerator(int n);

  int order() const { return n_; }
  std::uint64_t size() const { return count_; }
  OrientedGraph at(std::uint64_t index) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < count_; ++i) f(at(i));
  }

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::uint64_t count_ = 1;
};

/// n <= 5 always; n = 6 (about 1.4e7 graphs) only with allow_n6.
/// Throws EnumerationTooLarge ("TooLarge") otherwise.
OrientedGraphEnumerator enumerate_oriented_graphs(int n, bool allow_n6 = false);

}  // namespace antipath
