#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "antipath/digraph.hpp"

namespace antipath {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `copies` disjoint rotational regular tournaments on k vertices: inside a
/// copy, vertex i beats i+1, ..., i+(k-1)/2 (mod k). With a shuffle seed the
/// vertex labels are permuted uniformly at random. Throws GeneratorError for
/// even k ("EvenK") or k < 1.
OrientedGraph gen_tournament_union(int k, int copies, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Blow-up of the directed cycle of length ell: class S_i = {i*s, ..., i*s+s-1},
/// every vertex of S_i points to every vertex of S_{i+1 mod ell}.
OrientedGraph gen_cycle_blowup(int ell, int s);

/// Every pair oriented by a fair coin.
OrientedGraph gen_random_tournament(int n, std::uint64_t seed);

/// Every pair present with probability p, then oriented by a fair coin.
OrientedGraph gen_random_oriented(int n, double p, std::uint64_t seed);

/// Uniformly random digraph (2-cycles allowed) with exactly `edges` edges.
Digraph gen_random_digraph(int n, std::size_t edges, std::uint64_t seed);

/// Relabel v -> perm[v]. perm must be a permutation of 0..n-1.
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

/// Stateless per-trial seed derivation (splitmix64 of seed and index), so
/// sharded trials are reproducible regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace antipath
