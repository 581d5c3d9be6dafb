#include "antipath/peel.hpp"

#include <deque>
#include <stdexcept>

namespace antipath {

Digraph peel(const Digraph& d, const Rational& threshold) {
  if (threshold < Rational(0)) throw std::invalid_argument("peel: negative threshold");
  const int n = d.order();
  // Stub 2v is v_out, stub 2v+1 is v_in.
  std::vector<int> degree(2 * static_cast<std::size_t>(n));
  std::vector<char> alive(degree.size(), 1), queued(degree.size(), 0);
  std::deque<int> queue;
  auto consider = [&](int stub) {
    if (!queued[stub] && less_equal(degree[stub], threshold)) {
      queued[stub] = 1;
      queue.push_back(stub);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    degree[2 * v] = d.out_degree(v);
    degree[2 * v + 1] = d.in_degree(v);
  }
  for (int stub = 0; stub < static_cast<int>(degree.size()); ++stub) consider(stub);

  while (!queue.empty()) {
    const int stub = queue.front();
    queue.pop_front();
    alive[stub] = 0;
    const Vertex v = stub / 2;
    if (stub % 2 == 0) {
      for (Vertex w : d.out(v))
        if (alive[2 * w + 1]) {
          --degree[2 * w + 1];
          consider(2 * w + 1);
        }
    } else {
      for (Vertex w : d.in(v))
        if (alive[2 * w]) {
          --degree[2 * w];
          consider(2 * w);
        }
    }
  }

  std::vector<Edge> kept;
  for (const Edge& e : d.edges())
    if (alive[2 * e.from] && alive[2 * e.to + 1]) kept.push_back(e);
  return with_edges(d, std::move(kept));
}

}  // namespace antipath
