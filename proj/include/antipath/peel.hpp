#pragma once

#include "antipath/bound.hpp"
#include "antipath/digraph.hpp"

namespace antipath {

/// Peel the bipartite double of D: split every v into an out-stub (its
/// out-edges) and an in-stub (its in-edges), then repeatedly delete stubs of
/// degree <= threshold. Returns the subdigraph on the surviving edges, on the
/// same vertex set and of the same kind as D.
///
/// Every surviving in- and out-degree is 0 or > threshold, so the result has
/// pseudo-semidegree > threshold. Each deleted stub removes at most
/// `threshold` edges, hence the result is non-empty whenever
/// |E(D)| > 2 * threshold * |V(D)|. The result is the unique largest such
/// subgraph, so it does not depend on deletion order.
Digraph peel(const Digraph& d, const Rational& threshold);

}  // namespace antipath
