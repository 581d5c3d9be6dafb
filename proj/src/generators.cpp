#include "antipath/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace antipath {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != d.order()) throw GeneratorError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(d.size());
  for (const Edge& e : d.edges()) edges.push_back({perm[e.from], perm[e.to]});
  return build_graph(d.order(), std::move(edges), d.kind());
}

OrientedGraph gen_tournament_union(int k, int copies, std::optional<std::uint64_t> shuffle_seed) {
  if (k < 1) throw GeneratorError("tournament-union: k must be positive");
  if (k % 2 == 0) throw GeneratorError("EvenK: regular tournaments need odd k, got " + std::to_string(k));
  if (copies < 0) throw GeneratorError("tournament-union: negative copy count");
  const int half = (k - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(copies) * k * half);
  for (int c = 0; c < copies; ++c) {
    const int base = c * k;
    for (int i = 0; i < k; ++i)
      for (int step = 1; step <= half; ++step) edges.push_back({base + i, base + (i + step) % k});
  }
  OrientedGraph g(k * copies, std::move(edges));
  if (!shuffle_seed) return g;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(*shuffle_seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return OrientedGraph(relabel(g, perm));
}

OrientedGraph gen_cycle_blowup(int ell, int s) {
  if (ell < 3) throw GeneratorError("blowup: cycle length must be >= 3");
  if (s < 1) throw GeneratorError("blowup: class size must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(ell) * s * s);
  for (int i = 0; i < ell; ++i) {
    const int next = (i + 1) % ell;
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) edges.push_back({i * s + a, next * s + b});
  }
  return OrientedGraph(ell * s, std::move(edges));
}

OrientedGraph gen_random_tournament(int n, std::uint64_t seed) { return gen_random_oriented(n, 1.0, seed); }

OrientedGraph gen_random_oriented(int n, double p, std::uint64_t seed) {
  if (n < 0) throw GeneratorError("random: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw GeneratorError("random: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(p);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present(rng)) continue;
      edges.push_back(coin(rng) ? Edge{u, v} : Edge{v, u});
    }
  return OrientedGraph(n, std::move(edges));
}

Digraph gen_random_digraph(int n, std::size_t edges, std::uint64_t seed) {
  const std::size_t capacity = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1);
  if (edges > capacity) throw GeneratorError("random digraph: more edges than ordered pairs");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, std::max(n - 1, 0));
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> out;
  out.reserve(edges);
  while (out.size() < edges) {
    const Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!seen.insert(static_cast<std::uint64_t>(u) * n + v).second) continue;
    out.push_back({u, v});
  }
  return Digraph(n, std::move(out));
}

}  // namespace antipath
