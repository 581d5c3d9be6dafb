#include "antipath/oracle.hpp"

#include <string>

namespace antipath {

bool OracleResult::realizes(int length, Orientation o) const {
  const auto& row = realized[o == Orientation::ForwardFirst ? 0 : 1];
  return length >= 0 && length < static_cast<int>(row.size()) && row[length];
}

namespace {

struct BudgetStop {};

class AlternatingSearch {
 public:
  AlternatingSearch(const OrientedGraph& d, std::uint64_t budget) : d_(d), budget_(budget), on_path_(d.order(), 0) {
    for (Vertex v = 0; v < d.order(); ++v)
      if (d.out_degree(v) + d.in_degree(v) > 0) ++active_;
  }

  std::uint64_t expansions() const { return expansions_; }

  // --- longest ---
  void longest_from(Vertex start, bool forward_first) {
    start_forward_ = forward_first;
    path_.assign(1, start);
    on_path_[start] = 1;
    grow_longest(forward_first);
    on_path_[start] = 0;
  }

  int best = -1;
  std::array<bool, 2> best_types{false, false};
  std::vector<Vertex> best_path;

  bool settled() const {
    if (best < 0) return false;
    const int ceiling = active_ > 0 ? active_ - 1 : 0;
    return best >= ceiling && complete_at_best();
  }

  // --- decision ---
  bool reach_from(Vertex start, bool forward_first, int k) {
    path_.assign(1, start);
    on_path_[start] = 1;
    const bool hit = grow_to(forward_first, k);
    on_path_[start] = 0;
    return hit;
  }

 private:
  bool complete_at_best() const { return best % 2 == 1 || (best_types[0] && best_types[1]); }

  void expand() {
    if (++expansions_ > budget_) throw BudgetStop{};
  }

  void grow_longest(bool need_forward) {
    const int length = static_cast<int>(path_.size()) - 1;
    if (length > best) {
      best = length;
      best_types = {false, false};
      best_path = path_;
    }
    if (length == best) best_types[start_forward_ ? 0 : 1] = true;
    // Every path vertex is active once length >= 1, so this bounds any extension.
    const int upper = length + (active_ - static_cast<int>(path_.size()));
    if (upper < best || (upper == best && complete_at_best())) return;

    const Vertex v = path_.back();
    for (Vertex w : need_forward ? d_.out(v) : d_.in(v)) {
      if (on_path_[w]) continue;
      expand();
      on_path_[w] = 1;
      path_.push_back(w);
      grow_longest(!need_forward);
      path_.pop_back();
      on_path_[w] = 0;
    }
  }

  bool grow_to(bool need_forward, int k) {
    const int length = static_cast<int>(path_.size()) - 1;
    if (length == k) return true;
    if (length + (active_ - static_cast<int>(path_.size())) < k && length > 0) return false;
    const Vertex v = path_.back();
    for (Vertex w : need_forward ? d_.out(v) : d_.in(v)) {
      if (on_path_[w]) continue;
      expand();
      on_path_[w] = 1;
      path_.push_back(w);
      const bool hit = grow_to(!need_forward, k);
      path_.pop_back();
      on_path_[w] = 0;
      if (hit) return true;
    }
    return false;
  }

  const OrientedGraph& d_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  int active_ = 0;
  bool start_forward_ = true;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

OracleResult longest_antipath(const OrientedGraph& d, std::uint64_t budget) {
  OracleResult result;
  if (d.order() == 0) {
    result.realized = {std::vector<bool>{true}, std::vector<bool>{true}};
    return result;
  }
  AlternatingSearch search(d, budget);
  try {
    for (Vertex s = 0; s < d.order() && !search.settled(); ++s)
      for (bool forward : {true, false}) {
        if (search.settled()) break;
        search.longest_from(s, forward);
      }
  } catch (const BudgetStop&) {
    result.exact = false;
  }
  result.expansions = search.expansions();
  result.max_length = search.best;
  result.witness = validate_antipath(d, search.best_path);

  // Shorter lengths are windows of a longest path at offsets 0 and 1, so
  // both orientations occur; at odd lengths a path and its reverse differ.
  for (int o = 0; o < 2; ++o) {
    auto& row = result.realized[o];
    row.assign(result.max_length + 1, true);
    if (result.max_length > 0 && result.max_length % 2 == 0) row[result.max_length] = search.best_types[o];
  }
  return result;
}

bool has_antipath(const OrientedGraph& d, int k, Orientation orient, std::uint64_t budget) {
  if (k < 0) return false;
  if (k == 0) return d.order() > 0;
  if (k >= d.order()) return false;
  AlternatingSearch search(d, budget);
  try {
    for (Vertex s = 0; s < d.order(); ++s)
      if (search.reach_from(s, orient == Orientation::ForwardFirst, k)) return true;
  } catch (const BudgetStop&) {
    throw BudgetExhausted();
  }
  return false;
}

OrientedGraphEnumerator::OrientedGraphEnumerator(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative vertex count");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  for (std::size_t p = 0; p < pairs_.size(); ++p) count_ *= 3;
}

OrientedGraph OrientedGraphEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("OrientedGraphEnumerator::at");
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs_) {
    const auto digit = index % 3;
    index /= 3;
    if (digit == 1) edges.push_back({u, v});
    if (digit == 2) edges.push_back({v, u});
  }
  return OrientedGraph(n_, std::move(edges));
}

OrientedGraphEnumerator enumerate_oriented_graphs(int n, bool allow_n6) {
  if (n > 6 || (n == 6 && !allow_n6))
    throw EnumerationTooLarge("TooLarge: exhaustive enumeration is limited to n <= 5 (n = 6 behind a flag), got n = " +
                              std::to_string(n));
  return OrientedGraphEnumerator(n);
}

}  // namespace antipath
