#include "antipath/digraph.hpp"

#include <algorithm>
#include <limits>

namespace antipath {

std::string to_string(GraphKind kind) { return kind == GraphKind::Oriented ? "oriented" : "digraph"; }

std::string to_string(GraphError::Code code) {
  switch (code) {
    case GraphError::Code::VertexOutOfRange: return "VertexOutOfRange";
    case GraphError::Code::LoopEdge: return "LoopEdge";
    case GraphError::Code::DuplicateEdge: return "DuplicateEdge";
    case GraphError::Code::TwoCycleInOriented: return "TwoCycleInOriented";
  }
  return "GraphError";
}

GraphError::GraphError(Code code, Edge edge)
    : std::runtime_error(to_string(code) + " (" + std::to_string(edge.from) + "," + std::to_string(edge.to) + ")"),
      code_(code),
      edge_(edge) {}

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
  for (const Edge& e : edges_) {
    if (!contains(e.from) || !contains(e.to)) throw GraphError(GraphError::Code::VertexOutOfRange, e);
    if (e.from == e.to) throw GraphError(GraphError::Code::LoopEdge, e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw GraphError(GraphError::Code::DuplicateEdge, *dup);

  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (int v = 0; v < n_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<int> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // edges_ is sorted by (from, to): out lists come out sorted, and scanning
  // sources in ascending order keeps every in list sorted too.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_targets_[i] = edges_[i].to;
    in_sources_[in_fill[edges_[i].to]++] = edges_[i].from;
  }
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nbrs = out(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Digraph::has_two_cycle() const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.from < e.to && has_edge(e.to, e.from); });
}

OrientedGraph::OrientedGraph(int n, std::vector<Edge> edges) : OrientedGraph(Digraph(n, std::move(edges))) {}

OrientedGraph::OrientedGraph(const Digraph& d) : Digraph(d) {
  kind_ = GraphKind::Oriented;
  for (const Edge& e : edges())
    if (e.from < e.to && has_edge(e.to, e.from)) throw GraphError(GraphError::Code::TwoCycleInOriented, Edge{e.to, e.from});
}

Digraph build_graph(int n, std::vector<Edge> edges, GraphKind kind) {
  if (kind == GraphKind::Oriented) return OrientedGraph(n, std::move(edges));
  return Digraph(n, std::move(edges));
}

namespace {

std::vector<Edge> reversed_edges(const Digraph& d) {
  std::vector<Edge> out;
  out.reserve(d.size());
  for (const Edge& e : d.edges()) out.push_back({e.to, e.from});
  return out;
}

}  // namespace

Digraph reverse(const Digraph& d) {
  if (d.kind() == GraphKind::Oriented) return OrientedGraph(d.order(), reversed_edges(d));
  return Digraph(d.order(), reversed_edges(d));
}

OrientedGraph reverse(const OrientedGraph& d) { return OrientedGraph(d.order(), reversed_edges(d)); }

Digraph with_edges(const Digraph& d, std::vector<Edge> edges) {
  return build_graph(d.order(), std::move(edges), d.kind());
}

DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  const int n = d.order();
  p.out_degree.resize(n);
  p.in_degree.resize(n);
  int delta0 = std::numeric_limits<int>::max();
  int pseudo = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n; ++v) {
    p.out_degree[v] = d.out_degree(v);
    p.in_degree[v] = d.in_degree(v);
    for (int deg : {p.out_degree[v], p.in_degree[v]}) {
      delta0 = std::min(delta0, deg);
      if (deg > 0) pseudo = std::min(pseudo, deg);
    }
  }
  p.delta0 = n == 0 ? 0 : delta0;
  p.pseudo_delta0 = d.size() == 0 ? 0 : pseudo;
  return p;
}

int pseudo_semidegree(const Digraph& d) { return degree_profile(d).pseudo_delta0; }
int semidegree(const Digraph& d) { return degree_profile(d).delta0; }

}  // namespace antipath
