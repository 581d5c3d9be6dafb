#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace antipath {

using Vertex = std::int32_t;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class GraphKind { Digraph, Oriented };

std::string to_string(GraphKind kind);

class GraphError : public std::runtime_error {
 public:
  enum class Code { VertexOutOfRange, LoopEdge, DuplicateEdge, TwoCycleInOriented };

  GraphError(Code code, Edge edge);

  Code code() const { return code_; }
  Edge edge() const { return edge_; }

 private:
  Code code_;
  Edge edge_;
};

std::string to_string(GraphError::Code code);

/// Loop-free directed graph on vertices 0..n-1, at most one edge per
/// direction. Immutable after construction. Adjacency is stored CSR-style
/// with every neighbour list sorted ascending.
class Digraph {
 public:
  Digraph() = default;
  /// Throws GraphError on out-of-range endpoints, loops and duplicates.
  Digraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  GraphKind kind() const { return kind_; }

  /// Sorted lexicographically by (from, to).
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  int out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  int in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// True when some pair carries both directions.
  bool has_two_cycle() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.edges_ == b.edges_;
  }

 protected:
  GraphKind kind_ = GraphKind::Digraph;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<int> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// Digraph with no 2-cycles.
class OrientedGraph : public Digraph {
 public:
  OrientedGraph() { kind_ = GraphKind::Oriented; }
  /// Throws GraphError (TwoCycleInOriented among others).
  OrientedGraph(int n, std::vector<Edge> edges);
  explicit OrientedGraph(const Digraph& d);
};

Digraph build_graph(int n, std::vector<Edge> edges, GraphKind kind);

Digraph reverse(const Digraph& d);
OrientedGraph reverse(const OrientedGraph& d);

/// Subgraph on the same vertex set keeping only `edges` (which must be edges of d).
Digraph with_edges(const Digraph& d, std::vector<Edge> edges);

struct DegreeProfile {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  int delta0 = 0;         ///< min over all in- and out-degrees
  int pseudo_delta0 = 0;  ///< min over the positive in- and out-degrees, 0 if edgeless
};

DegreeProfile degree_profile(const Digraph& d);
int pseudo_semidegree(const Digraph& d);
int semidegree(const Digraph& d);

/// Orientation-agnostic read access to a graph or to its reverse. All the
/// "by symmetry" reductions in the pathfinder go through this.
class DirectedView {
 public:
  explicit DirectedView(const Digraph& g, bool flipped = false) : g_(&g), flipped_(flipped) {}

  std::span<const Vertex> out(Vertex v) const { return flipped_ ? g_->in(v) : g_->out(v); }
  std::span<const Vertex> in(Vertex v) const { return flipped_ ? g_->out(v) : g_->in(v); }
  int out_degree(Vertex v) const { return flipped_ ? g_->in_degree(v) : g_->out_degree(v); }
  int in_degree(Vertex v) const { return flipped_ ? g_->out_degree(v) : g_->in_degree(v); }
  bool has_edge(Vertex u, Vertex v) const { return flipped_ ? g_->has_edge(v, u) : g_->has_edge(u, v); }
  int order() const { return g_->order(); }
  bool flipped() const { return flipped_; }
  DirectedView reversed() const { return DirectedView(*g_, !flipped_); }
  const Digraph& graph() const { return *g_; }

 private:
  const Digraph* g_;
  bool flipped_;
};

}  // namespace antipath
