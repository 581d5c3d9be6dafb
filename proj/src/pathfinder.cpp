#include "antipath/pathfinder.hpp"

#include <algorithm>
#include <utility>

#include "antipath/fact1.hpp"
#include "antipath/peel.hpp"

namespace antipath {

std::string to_string(DegreeSide side) { return side == DegreeSide::Out ? "out" : "in"; }

std::string to_string(StepKind step) {
  switch (step) {
    case StepKind::Seed: return "seed";
    case StepKind::ExtendEndpoint: return "extend_endpoints";
    case StepKind::RotateEven: return "rotate_even_step";
    case StepKind::CloseAndExtend: return "close_anticycle+extend_anticycle";
    case StepKind::Extract: return "extract_window";
  }
  return "step";
}

bool violation_is_honest(const Digraph& d, const StepFailure& f) {
  if (!d.contains(f.witness)) return false;
  const int degree = f.side == DegreeSide::Out ? d.out_degree(f.witness) : d.in_degree(f.witness);
  if (degree != f.degree || degree <= 0) return false;
  return !f.asserted.holds(degree) && !f.asserted.holds(pseudo_semidegree(d));
}

namespace {

// Vertex -> position lookup for a short vertex sequence living in a large graph.
class PositionIndex {
 public:
  explicit PositionIndex(const std::vector<Vertex>& verts) {
    entries_.reserve(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) entries_.emplace_back(verts[i], i);
    std::sort(entries_.begin(), entries_.end());
  }
  int position(Vertex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<Vertex, int>{v, -1});
    return it != entries_.end() && it->first == v ? it->second : -1;
  }
  bool contains(Vertex v) const { return position(v) >= 0; }

 private:
  std::vector<std::pair<Vertex, int>> entries_;
};

// Degree sides are reported against the real graph, not the view.
DegreeSide real_side(const DirectedView& view, DegreeSide side) {
  if (!view.flipped()) return side;
  return side == DegreeSide::Out ? DegreeSide::In : DegreeSide::Out;
}

int view_degree(const DirectedView& view, Vertex v, DegreeSide side) {
  return side == DegreeSide::Out ? view.out_degree(v) : view.in_degree(v);
}

StepFailure make_failure(std::string step, const DirectedView& view, std::initializer_list<std::pair<Vertex, DegreeSide>> candidates,
                         const DegreeBound& asserted, std::string detail) {
  // The smallest candidate degree is the one the counting argument proves too small.
  auto best = *std::min_element(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    return view_degree(view, a.first, a.second) < view_degree(view, b.first, b.second);
  });
  StepFailure f;
  f.step = std::move(step);
  f.witness = best.first;
  f.side = real_side(view, best.second);
  f.degree = view_degree(view, best.first, best.second);
  f.asserted = asserted;
  f.detail = std::move(detail);
  return f;
}

AntiPath checked_path(const Digraph& d, std::vector<Vertex> verts, const char* step) {
  if (auto defect = antipath_defect(d, verts))
    throw std::logic_error(std::string(step) + " built an invalid antipath: " + describe(*defect));
  return validate_antipath(d, std::move(verts));
}

std::optional<Vertex> first_off(std::span<const Vertex> candidates, const PositionIndex& on) {
  for (Vertex w : candidates)
    if (!on.contains(w)) return w;
  return std::nullopt;
}

void require_stuck(const Digraph& d, const AntiPath& p, const char* step) {
  if (extend_endpoints(d, p)) throw ContractError(std::string(step) + ": antipath is extendable at an endpoint");
}

}  // namespace

std::optional<AntiPath> extend_endpoints(const Digraph& d, const AntiPath& p) {
  const auto& verts = p.verts();
  const int m = p.length();
  PositionIndex on(verts);
  if (m == 0) {
    const Vertex v = verts.front();
    if (auto w = first_off(d.out(v), on)) return validate_antipath(d, {v, *w});
    if (auto w = first_off(d.in(v), on)) return validate_antipath(d, {v, *w});
    return std::nullopt;
  }
  // v_0 becomes internal: its new edge must point the same way as its path edge.
  const Vertex v0 = verts.front();
  if (auto w = first_off(p.edge_forward(0) ? d.out(v0) : d.in(v0), on)) {
    std::vector<Vertex> next{*w};
    next.insert(next.end(), verts.begin(), verts.end());
    return checked_path(d, std::move(next), "extend_endpoints");
  }
  const Vertex vm = verts.back();
  if (auto w = first_off(p.edge_forward(m - 1) ? d.in(vm) : d.out(vm), on)) {
    std::vector<Vertex> next(verts);
    next.push_back(*w);
    return checked_path(d, std::move(next), "extend_endpoints");
  }
  return std::nullopt;
}

StepResult<AntiPath> rotate_even_step(const OrientedGraph& d, const AntiPath& p, const DegreeBound& asserted) {
  const int m = p.length();
  if (m < 2 || m % 2 != 0) throw ContractError("rotate_even_step: needs even length >= 2");
  const std::int64_t min_deg = asserted.min_degree();
  if (!(m < 2 * min_deg)) throw ContractError("rotate_even_step: needs m < 2D for the asserted bound");
  require_stuck(d, p, "rotate_even_step");

  // Work in the view where v_0 -> v_1; with m even this also gives v_m -> v_{m-1}.
  const DirectedView view(d, p.orientation() == Orientation::BackwardFirst);
  std::vector<Vertex> q = p.verts();
  const PositionIndex on(q);

  std::vector<UndirectedPair> f0, fm;
  for (Vertex w : view.out(q.front())) f0.emplace_back(q.front(), w);
  for (Vertex w : view.out(q.back())) fm.emplace_back(q.back(), w);
  const Fact1Instance inst(std::vector<Vertex>(q.begin(), q.end() - 1), std::vector<Vertex>(q.begin() + 1, q.end()),
                           std::move(f0), std::move(fm), 1);
  const auto found = fact1_index(inst);
  if (!found) {
    return make_failure("rotate_even_step", view, {{q.front(), DegreeSide::Out}, {q.back(), DegreeSide::Out}}, asserted,
                        "endpoint chords: d_F0 + d_Fm = " + std::to_string(inst.degree_sum()) + " < m + 1 = " +
                            std::to_string(m + 1));
  }
  int i = *found;
  // We need v_i -> v_{i-1}, which holds for even i; otherwise read P backwards.
  if (i % 2 == 1) {
    std::reverse(q.begin(), q.end());
    i = m - i + 1;
  }
  if (!view.has_edge(q[i], q[i - 1]) || !view.has_edge(q[0], q[i]) || !view.has_edge(q[m], q[i - 1]))
    throw std::logic_error("rotate_even_step: rotation chords missing");

  // P' = v_i ... v_m v_{i-1} ... v_0 leaves v_i on its first edge;
  // P'' = v_i v_0 ... v_{i-1} v_m ... v_{i+1} enters v_i on its first edge.
  std::vector<Vertex> leaving(q.begin() + i, q.end());
  for (int j = i - 1; j >= 0; --j) leaving.push_back(q[j]);
  std::vector<Vertex> entering{q[i]};
  entering.insert(entering.end(), q.begin(), q.begin() + i);
  for (int j = m; j > i; --j) entering.push_back(q[j]);

  const Vertex pivot = q[i];
  if (auto w = first_off(view.out(pivot), on)) {
    leaving.insert(leaving.begin(), *w);
    return checked_path(d, std::move(leaving), "rotate_even_step");
  }
  if (auto w = first_off(view.in(pivot), on)) {
    entering.insert(entering.begin(), *w);
    return checked_path(d, std::move(entering), "rotate_even_step");
  }
  return make_failure("rotate_even_step", view, {{pivot, DegreeSide::Out}, {pivot, DegreeSide::In}}, asserted,
                      "rotation pivot has all " + std::to_string(view.out_degree(pivot) + view.in_degree(pivot)) +
                          " neighbours on the path (m = " + std::to_string(m) + ")");
}

StepResult<AntiCycle> close_anticycle(const OrientedGraph& d, const AntiPath& p, int k) {
  return close_anticycle(d, p, k, default_bound(k));
}

StepResult<AntiCycle> close_anticycle(const OrientedGraph& d, const AntiPath& p, int k, const DegreeBound& asserted) {
  const int m = p.length();
  if (m < 3 || m % 2 != 1 || m >= k) throw ContractError("close_anticycle: needs odd 3 <= m < k");
  if (4 * asserted.min_degree() < 3 * std::int64_t{m} + 1) throw ContractError("close_anticycle: needs 4D >= 3m+1");
  require_stuck(d, p, "close_anticycle");

  // For odd m reversing the path flips its type; make v_0 -> v_1 and so v_{m-1} -> v_m.
  const AntiPath forward = p.orientation() == Orientation::ForwardFirst ? p : p.reversed();
  const std::vector<Vertex>& q = forward.verts();
  const DirectedView view(d);
  const PositionIndex on(q);

  // X = even positions (sources), Y = odd positions (sinks).
  std::vector<Vertex> xs, ys;
  for (int j = 0; j <= m; ++j) (j % 2 == 0 ? xs : ys).push_back(q[j]);
  std::vector<UndirectedPair> f0, fm;
  for (Vertex w : view.out(q.front()))
    if (on.position(w) % 2 == 1) f0.emplace_back(q.front(), w);
  for (Vertex w : view.in(q.back())) {
    const int pos = on.position(w);
    if (pos >= 0 && pos % 2 == 0) fm.emplace_back(w, q.back());
  }
  const Fact1Instance inst(xs, ys, std::move(f0), std::move(fm), 1);
  const auto found = fact1_index(inst);
  if (!found) {
    return make_failure("close_anticycle", view, {{q.front(), DegreeSide::Out}, {q.back(), DegreeSide::In}}, asserted,
                        "closing chords: d_F0 + d_Fm = " + std::to_string(inst.degree_sum()) + " < m' + 1 = " +
                            std::to_string(inst.m() + 1));
  }
  const int i = *found;
  // v_0 ... v_{2i-2} v_m v_{m-1} ... v_{2i-1}, closed by v_0 -> v_{2i-1}.
  std::vector<Vertex> cycle(q.begin(), q.begin() + (2 * i - 1));
  for (int j = m; j >= 2 * i - 1; --j) cycle.push_back(q[j]);
  if (auto defect = anticycle_defect(d, cycle))
    throw std::logic_error("close_anticycle built an invalid anticycle: " + describe(*defect));
  return validate_anticycle(d, std::move(cycle));
}

StepResult<AntiPath> extend_anticycle(const OrientedGraph& d, const AntiCycle& c, int k) {
  return extend_anticycle(d, c, k, half_bound(k));
}

StepResult<AntiPath> extend_anticycle(const OrientedGraph& d, const AntiCycle& c, int k, const DegreeBound& asserted) {
  const int m = c.length() - 1;
  if (m >= k) throw ContractError("extend_anticycle: needs cycle length <= k");
  if (2 * asserted.min_degree() < std::int64_t{m} + 2) throw ContractError("extend_anticycle: needs 2D >= m+2");

  // Canonical indexing: v_0 is a source, so even positions are sources and odd ones sinks.
  std::vector<Vertex> v = c.verts();
  if (!c.starts_with_source()) std::rotate(v.begin(), v.begin() + 1, v.end());
  const DirectedView view(d);
  const PositionIndex on(v);

  // Open the cycle at v_j through an off-cycle neighbour in v_j's own direction.
  for (int j = 0; j <= m; ++j) {
    auto w = first_off(j % 2 == 0 ? view.out(v[j]) : view.in(v[j]), on);
    if (!w) continue;
    std::vector<Vertex> path{*w};
    for (int t = 0; t <= m; ++t) path.push_back(v[(j + t) % (m + 1)]);
    return checked_path(d, std::move(path), "extend_anticycle");
  }

  std::vector<UndirectedPair> f0, fm;
  for (Vertex w : view.out(v.front())) f0.emplace_back(v.front(), w);
  for (Vertex w : view.in(v.back())) fm.emplace_back(w, v.back());
  const Fact1Instance inst(std::vector<Vertex>(v.begin(), v.end() - 1), std::vector<Vertex>(v.begin() + 1, v.end()),
                           std::move(f0), std::move(fm), 2);
  const auto found = fact1_index(inst);
  if (!found) {
    return make_failure("extend_anticycle", view, {{v.front(), DegreeSide::Out}, {v.back(), DegreeSide::In}}, asserted,
                        "cycle chords: d_F0 + d_Fm = " + std::to_string(inst.degree_sum()) + " < m + 2 = " +
                            std::to_string(m + 2));
  }
  const int i = *found;
  const bool even = i % 2 == 0;
  // Even i: x -> v_i with x off C, then x -> y off C.
  // Odd i: v_{i-2} -> x with x off C, then y -> x off C.
  const Vertex pivot = even ? v[i] : v[i - 2];
  const DegreeSide x_side = even ? DegreeSide::In : DegreeSide::Out;
  std::optional<Vertex> first_x;
  for (Vertex x : even ? view.in(pivot) : view.out(pivot)) {
    if (on.contains(x)) continue;
    if (!first_x) first_x = x;
    auto y = first_off(even ? view.out(x) : view.in(x), on);
    if (!y) continue;
    std::vector<Vertex> path{*y, x};
    if (even) {
      path.push_back(v[i]);
      for (int t = 0; t <= i - 2; ++t) path.push_back(v[t]);
      for (int t = m; t >= i + 1; --t) path.push_back(v[t]);
    } else {
      path.push_back(v[i - 2]);
      for (int t = m; t >= i; --t) path.push_back(v[t]);
      for (int t = 0; t <= i - 3; ++t) path.push_back(v[t]);
    }
    return checked_path(d, std::move(path), "extend_anticycle");
  }
  if (!first_x) {
    return make_failure("extend_anticycle", view, {{pivot, DegreeSide::Out}, {pivot, DegreeSide::In}}, asserted,
                        "pivot v_" + std::to_string(even ? i : i - 2) + " has no " + to_string(x_side) +
                            "-neighbour off the cycle");
  }
  const DegreeSide y_side = even ? DegreeSide::Out : DegreeSide::In;
  return make_failure("extend_anticycle", view, {{*first_x, y_side}}, asserted,
                      "every off-cycle " + to_string(x_side) + "-neighbour of the pivot has all its " +
                          to_string(y_side) + "-neighbours on the cycle");
}

std::optional<AntiPath> find_window(const AntiPath& p, int k, Orientation orient) {
  const int m = p.length();
  if (k < 0 || k > m) return std::nullopt;
  for (const AntiPath& candidate : {p, p.reversed()}) {
    for (int start = 0; start + k <= m; ++start) {
      // Window orientation is fixed by the parity of its first edge.
      const bool forward = candidate.edge_forward(start);
      if (k == 0 || forward == (orient == Orientation::ForwardFirst)) return candidate.window(start, k);
    }
  }
  return std::nullopt;
}

AntiPath extract_window(const AntiPath& p, int k, Orientation orient) {
  if (auto w = find_window(p, k, orient)) return *w;
  throw SearchError(SearchError::Code::NoMatchingWindow,
                    "NoMatchingWindow: no " + std::to_string(k) + "-edge window with " + to_string(orient));
}

namespace {

void record(const DriverOptions& options, StepKind step) {
  if (options.trace) options.trace->push_back(step);
}

AntiPath seed_path(const Digraph& d, Orientation orient) {
  const Edge e = d.edges().front();
  return orient == Orientation::ForwardFirst ? validate_antipath(d, {e.from, e.to}) : validate_antipath(d, {e.to, e.from});
}

// A stuck single edge: its front vertex has degree exactly 1 on the path side.
StepFailure stuck_edge_failure(const Digraph& d, const AntiPath& p, const DegreeBound& asserted) {
  const DirectedView view(d);
  const DegreeSide side = p.edge_forward(0) ? DegreeSide::Out : DegreeSide::In;
  return make_failure("extend_endpoints", view, {{p.front(), side}}, asserted,
                      "seed edge cannot be extended at either end");
}

}  // namespace

SearchOutcome find_antipath(const OrientedGraph& d, int k, Orientation orient, const DriverOptions& options) {
  if (k == 2) throw SearchError(SearchError::Code::UnsupportedK, "UnsupportedK: k = 2 is not supported");
  if (k < 1) throw SearchError(SearchError::Code::UnsupportedK, "UnsupportedK: k must be positive");
  if (d.size() == 0) throw SearchError(SearchError::Code::EmptyGraph, "EmptyGraph: no edge to seed from");

  if (k == 1) {
    record(options, StepKind::Seed);
    return Found{seed_path(d, orient)};
  }

  const DegreeBound bound = options.bound.value_or(default_bound(k));
  if (bound.min_degree() < dense_bound(k).min_degree())
    throw std::invalid_argument("find_antipath: asserted bound is weaker than (3k-4)/4");
  const int pseudo = pseudo_semidegree(d);
  const bool guaranteed = bound.holds(pseudo);

  AntiPath path = seed_path(d, Orientation::ForwardFirst);
  record(options, StepKind::Seed);
  for (;;) {
    if (path.length() >= k) {
      if (auto w = find_window(path, k, orient)) {
        record(options, StepKind::Extract);
        return Found{*w};
      }
    }
    if (auto longer = extend_endpoints(d, path)) {
      path = std::move(*longer);
      record(options, StepKind::ExtendEndpoint);
      continue;
    }

    const int m = path.length();
    std::optional<StepFailure> failure;
    if (m % 2 == 0) {
      // Also the even-k endgame: m = k < 2D because D >= (3k-2)/4 and k > 2.
      auto r = rotate_even_step(d, path, bound);
      if (auto* next = std::get_if<AntiPath>(&r)) {
        path = std::move(*next);
        record(options, StepKind::RotateEven);
        continue;
      }
      failure = std::get<StepFailure>(std::move(r));
    } else if (m == 1) {
      failure = stuck_edge_failure(d, path, bound);
    } else {
      auto cycle = close_anticycle(d, path, k, bound);
      if (auto* c = std::get_if<AntiCycle>(&cycle)) {
        auto r = extend_anticycle(d, *c, k, bound);
        if (auto* next = std::get_if<AntiPath>(&r)) {
          path = std::move(*next);
          record(options, StepKind::CloseAndExtend);
          continue;
        }
        failure = std::get<StepFailure>(std::move(r));
      } else {
        failure = std::get<StepFailure>(std::move(cycle));
      }
    }

    if (guaranteed || options.trust_hypothesis) return HypothesisViolation{std::move(*failure), std::nullopt};
    NotGuaranteed ng;
    ng.reason = "pseudo-semidegree " + std::to_string(pseudo) + " does not satisfy " + bound.to_string() + "; " +
                failure->step + ": " + failure->detail;
    ng.best_path = std::move(path);
    ng.failure = std::move(failure);
    ng.pseudo_delta0 = pseudo;
    ng.bound = bound;
    return ng;
  }
}

SearchOutcome find_antipath_dense(const OrientedGraph& d, int k, Orientation orient, const DriverOptions& options) {
  if (k < 1) throw SearchError(SearchError::Code::UnsupportedK, "UnsupportedK: k must be positive");
  if (d.size() == 0) throw SearchError(SearchError::Code::EmptyGraph, "EmptyGraph: no edge to seed from");
  if (k == 1) return find_antipath(d, 1, orient, options);

  if (k == 2) {
    // ForwardFirst: a sink of in-degree 2 in the middle; BackwardFirst: a source of out-degree 2.
    for (Vertex v = 0; v < d.order(); ++v) {
      auto nbrs = orient == Orientation::ForwardFirst ? d.in(v) : d.out(v);
      if (nbrs.size() >= 2) {
        record(options, StepKind::Seed);
        return Found{validate_antipath(d, {nbrs[0], v, nbrs[1]})};
      }
    }
    NotGuaranteed ng;
    ng.reason = std::string("no vertex with two ") + (orient == Orientation::ForwardFirst ? "in" : "out") + "-neighbours";
    ng.best_path = seed_path(d, orient);
    ng.pseudo_delta0 = pseudo_semidegree(d);
    ng.bound = DegreeBound::at_least(Rational(2));
    return ng;
  }

  const OrientedGraph core(peel(d, Rational(3 * k - 4, 4)));
  if (core.size() == 0) {
    NotGuaranteed ng;
    ng.reason = "peeling at (3k-4)/4 = " + Rational(3 * k - 4, 4).to_string() + " leaves no edge (|E| = " +
                std::to_string(d.size()) + ", threshold (3k-4)|V|/2 = " + Rational((3 * k - 4) * d.order(), 2).to_string() + ")";
    ng.pseudo_delta0 = 0;
    ng.bound = options.bound.value_or(dense_bound(k));
    ng.peel_threshold = Rational(3 * k - 4, 4);
    return ng;
  }
  DriverOptions inner = options;
  inner.bound = options.bound.value_or(dense_bound(k));
  SearchOutcome outcome = find_antipath(core, k, orient, inner);
  // Certificates refer to the input graph; the core is a subgraph of it.
  if (auto* f = std::get_if<Found>(&outcome)) f->path = validate_antipath(d, f->path.verts());
  if (auto* ng = std::get_if<NotGuaranteed>(&outcome)) {
    if (ng->best_path) ng->best_path = validate_antipath(d, ng->best_path->verts());
    ng->peel_threshold = Rational(3 * k - 4, 4);
  }
  if (auto* hv = std::get_if<HypothesisViolation>(&outcome)) hv->peel_threshold = Rational(3 * k - 4, 4);
  return outcome;
}

}  // namespace antipath
