#pragma once

// Deliberately naive reference implementations used only by the tests. None of
// them calls into the library beyond reading a graph's edge list.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "antipath/digraph.hpp"
#include "antipath/fact1.hpp"

namespace oracle_ref {

using antipath::Digraph;
using antipath::Edge;
using antipath::Vertex;

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

inline EdgeSet edge_set(const Digraph& d) {
  EdgeSet s;
  for (const Edge& e : d.edges()) s.insert({e.from, e.to});
  return s;
}

struct Degrees {
  std::vector<int> out, in;
};

inline Degrees degrees(int n, const EdgeSet& edges) {
  Degrees d{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (auto [u, v] : edges) {
    ++d.out[u];
    ++d.in[v];
  }
  return d;
}

/// Largest t with every positive degree >= t; 0 when edgeless.
inline int pseudo_semidegree(int n, const EdgeSet& edges) {
  const Degrees d = degrees(n, edges);
  int best = -1;
  for (int v = 0; v < n; ++v)
    for (int x : {d.out[v], d.in[v]})
      if (x > 0 && (best < 0 || x < best)) best = x;
  return best < 0 ? 0 : best;
}

inline int pseudo_semidegree(const Digraph& d) { return pseudo_semidegree(d.order(), edge_set(d)); }

/// Checks distinctness, edges and alternation directly. Returns the direction
/// of the first edge (true = v0 -> v1) when valid.
inline std::optional<bool> alternating(const EdgeSet& edges, const std::vector<Vertex>& seq) {
  if (seq.size() < 2) return std::nullopt;
  std::set<Vertex> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) return std::nullopt;
  std::optional<bool> first;
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    const bool fwd = edges.count({seq[j], seq[j + 1]}) > 0;
    const bool bwd = edges.count({seq[j + 1], seq[j]}) > 0;
    if (fwd == bwd) return std::nullopt;  // missing, or both directions
    const bool expect = j % 2 == 0 ? fwd : !fwd;
    if (!first) first = fwd;
    if (j > 0 && expect != *first) return std::nullopt;
  }
  return first;
}

/// Does some antipath with k edges and the given first-edge direction exist?
/// Plain recursion over all sequences of distinct vertices.
inline bool brute_has_antipath(const Digraph& d, int k, bool forward_first) {
  const EdgeSet edges = edge_set(d);
  const int n = d.order();
  if (k == 0) return n > 0;
  std::vector<Vertex> seq;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == k + 1) {
      auto first = alternating(edges, seq);
      return first && *first == forward_first;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (!seq.empty()) {
        // Next edge direction is fixed by position.
        const std::size_t j = seq.size() - 1;
        const bool want_fwd = (j % 2 == 0) == forward_first;
        if (want_fwd ? !edges.count({seq.back(), v}) : !edges.count({v, seq.back()})) continue;
      }
      used[v] = 1;
      seq.push_back(v);
      const bool hit = self(self);
      seq.pop_back();
      used[v] = 0;
      if (hit) return true;
    }
    return false;
  };
  return rec(rec);
}

/// Every antipath (as a vertex sequence, each direction listed separately)
/// with between min_len and max_len edges.
inline std::vector<std::vector<Vertex>> all_antipaths(const Digraph& d, int min_len, int max_len) {
  const EdgeSet edges = edge_set(d);
  const int n = d.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> seq;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, bool forward_first) -> void {
    const int len = static_cast<int>(seq.size()) - 1;
    if (len >= min_len && len >= 1) out.push_back(seq);
    if (len == max_len) return;
    const bool want_fwd = (len % 2 == 0) == forward_first;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (want_fwd ? !edges.count({seq.back(), v}) : !edges.count({v, seq.back()})) continue;
      used[v] = 1;
      seq.push_back(v);
      self(self, forward_first);
      seq.pop_back();
      used[v] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s)
    for (bool fwd : {true, false}) {
      seq.assign(1, s);
      used[s] = 1;
      rec(rec, fwd);
      used[s] = 0;
    }
  return out;
}

/// No vertex off the path can be attached at either end.
inline bool stuck(const Digraph& d, const std::vector<Vertex>& p) {
  const EdgeSet edges = edge_set(d);
  const std::set<Vertex> on(p.begin(), p.end());
  const bool first_fwd = edges.count({p[0], p[1]}) > 0;
  const std::size_t m = p.size() - 1;
  const bool last_fwd = edges.count({p[m - 1], p[m]}) > 0;
  for (Vertex x = 0; x < d.order(); ++x) {
    if (on.count(x)) continue;
    // Front: v0 must keep alternating, so the new edge points the same way at v0 as edge 0 does.
    if (first_fwd ? edges.count({p[0], x}) : edges.count({x, p[0]})) return false;
    if (last_fwd ? edges.count({x, p[m]}) : edges.count({p[m], x})) return false;
  }
  return true;
}

/// Every anticycle as a vertex sequence (all rotations and directions).
inline std::vector<std::vector<Vertex>> all_anticycles(const Digraph& d, int max_len) {
  const EdgeSet edges = edge_set(d);
  std::vector<std::vector<Vertex>> out;
  for (auto& p : all_antipaths(d, 3, max_len - 1)) {
    if ((p.size() % 2) != 0) continue;
    // Closing edge v_m v_0 must continue the alternation.
    const bool first_fwd = edges.count({p[0], p[1]}) > 0;
    const std::size_t m = p.size() - 1;
    const bool close_fwd = m % 2 == 0 ? first_fwd : !first_fwd;
    if (close_fwd ? edges.count({p[m], p[0]}) : edges.count({p[0], p[m]})) out.push_back(p);
  }
  return out;
}

inline int brute_longest(const Digraph& d) {
  if (d.order() == 0) return 0;
  int best = 0;
  for (int k = 1; k < d.order(); ++k)
    if (brute_has_antipath(d, k, true) || brute_has_antipath(d, k, false)) best = k;
  return best;
}

/// Linear scan over i = ell..m.
inline std::optional<int> fact1_scan(const antipath::Fact1Instance& inst) {
  const int m = inst.m();
  auto has = [](const std::vector<antipath::UndirectedPair>& f, Vertex u, Vertex v) {
    const antipath::UndirectedPair p(u, v);
    for (const auto& q : f)
      if (q.a == p.a && q.b == p.b) return true;
    return false;
  };
  for (int i = inst.ell(); i <= m; ++i)
    if (has(inst.f0(), inst.x(0), inst.y(i)) && has(inst.fm(), inst.x(i - inst.ell()), inst.y(m))) return i;
  return std::nullopt;
}

/// d_F0(x0, Y) + d_Fm(y_m, X), counting distinct neighbours.
inline int fact1_degree_sum(const antipath::Fact1Instance& inst) {
  std::set<Vertex> ys(inst.ys().begin(), inst.ys().end());
  std::set<Vertex> xs(inst.xs().begin(), inst.xs().end());
  auto count = [](const std::vector<antipath::UndirectedPair>& f, Vertex c, const std::set<Vertex>& side) {
    std::set<Vertex> nb;
    for (const auto& p : f) {
      if (p.a == c && p.b != c && side.count(p.b)) nb.insert(p.b);
      if (p.b == c && p.a != c && side.count(p.a)) nb.insert(p.a);
    }
    return static_cast<int>(nb.size());
  };
  return count(inst.f0(), inst.x(0), ys) + count(inst.fm(), inst.y(inst.m()), xs);
}

/// Peeling by full recomputation each round: drop every edge at a stub whose
/// degree is at most the threshold num/den, until nothing changes.
inline EdgeSet peel_rounds(int n, EdgeSet edges, std::int64_t num, std::int64_t den) {
  for (bool changed = true; changed;) {
    changed = false;
    const Degrees d = degrees(n, edges);
    std::vector<char> dead_out(n), dead_in(n);
    for (int v = 0; v < n; ++v) {
      dead_out[v] = static_cast<std::int64_t>(d.out[v]) * den <= num;
      dead_in[v] = static_cast<std::int64_t>(d.in[v]) * den <= num;
    }
    for (auto it = edges.begin(); it != edges.end();) {
      if (dead_out[it->first] || dead_in[it->second]) {
        it = edges.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return edges;
}

}  // namespace oracle_ref
