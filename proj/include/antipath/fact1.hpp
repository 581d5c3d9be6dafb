#pragma once

#include <optional>
#include <vector>

#include "antipath/digraph.hpp"

namespace antipath {

/// Undirected edge; normalized so that a <= b.
struct UndirectedPair {
  Vertex a = 0;
  Vertex b = 0;

  UndirectedPair() = default;
  UndirectedPair(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}
  auto operator<=>(const UndirectedPair&) const = default;
};

/// Two vertex sequences X = x_0..x_{m-1} and Y = y_1..y_m, two undirected edge
/// sets F0 and Fm, and an offset 1 <= ell <= m. This is the Dirac-style
/// pigeonhole: if d_F0(x_0, Y) + d_Fm(y_m, X) >= m + ell there is an index
/// ell <= i <= m with x_0 y_i in F0 and x_{i-ell} y_m in Fm.
class Fact1Instance {
 public:
  /// Throws std::invalid_argument unless |xs| == |ys| >= 1, 1 <= ell <= m and
  /// every pair in f0/fm has both endpoints in X u Y.
  Fact1Instance(std::vector<Vertex> xs, std::vector<Vertex> ys, std::vector<UndirectedPair> f0,
                std::vector<UndirectedPair> fm, int ell);

  int m() const { return static_cast<int>(xs_.size()); }
  int ell() const { return ell_; }
  Vertex x(int i) const { return xs_[i]; }      ///< 0 <= i < m
  Vertex y(int i) const { return ys_[i - 1]; }  ///< 1 <= i <= m

  bool in_f0(Vertex u, Vertex v) const;
  bool in_fm(Vertex u, Vertex v) const;

  /// d_F0(x_0, Y) + d_Fm(y_m, X).
  int degree_sum() const;

  const std::vector<UndirectedPair>& f0() const { return f0_; }
  const std::vector<UndirectedPair>& fm() const { return fm_; }
  const std::vector<Vertex>& xs() const { return xs_; }
  const std::vector<Vertex>& ys() const { return ys_; }

 private:
  std::vector<Vertex> xs_;
  std::vector<Vertex> ys_;
  std::vector<UndirectedPair> f0_;  // sorted, unique
  std::vector<UndirectedPair> fm_;  // sorted, unique
  int ell_;
};

/// Smallest i in [ell, m] with x_0 y_i in F0 and x_{i-ell} y_m in Fm.
std::optional<int> fact1_index(const Fact1Instance& inst);

}  // namespace antipath
