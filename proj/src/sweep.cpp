#include "antipath/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "antipath/certificate.hpp"
#include "antipath/generators.hpp"
#include "antipath/graph_io.hpp"
#include "antipath/oracle.hpp"
#include "antipath/pathfinder.hpp"
#include "antipath/peel.hpp"

namespace antipath {

void SweepReport::merge(const SweepReport& other) {
  instances += other.instances;
  checks += other.checks;
  found += other.found;
  not_guaranteed += other.not_guaranteed;
  violations += other.violations;
  false_violations += other.false_violations;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string SweepReport::summary() const {
  std::ostringstream out;
  out << mode << ": instances=" << instances << " checks=" << checks << " found=" << found
      << " not_guaranteed=" << not_guaranteed << " violations=" << violations << " false_violations=" << false_violations
      << " skipped=" << skipped << " failures=" << failures.size();
  return out.str();
}

namespace {

struct Trial {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  int k = 0;
  Orientation orient = Orientation::ForwardFirst;
  bool dense = false;
  bool trust = false;
};

void add_failure(SweepReport& r, const Trial& t, const Digraph& g, std::string message) {
  r.failures.push_back({t.index, t.seed, t.k, t.orient, t.dense, t.trust, std::move(message), emit_graph(g)});
}

// Certificate emitted, serialized, parsed back and checked against a re-parsed graph.
std::optional<std::string> certificate_problem(const OrientedGraph& g, const SearchOutcome& out, const Trial& t) {
  const Certificate cert = make_certificate(g, out, t.k, t.orient);
  const Certificate back = parse_certificate(to_json_text(cert));
  const Verdict verdict = verify_certificate(parse_graph(emit_graph(g)), back);
  if (!verdict.ok) return "certificate rejected: " + verdict.message;
  return std::nullopt;
}

bool honest(const OrientedGraph& g, const HypothesisViolation& hv) {
  if (!hv.peel_threshold) return violation_is_honest(g, hv.failure);
  return violation_is_honest(peel(g, *hv.peel_threshold), hv.failure);
}

void tally(SweepReport& r, const OrientedGraph& g, const SearchOutcome& out, const Trial& t, bool must_find,
           bool with_certificate) {
  ++r.checks;
  if (const auto* f = std::get_if<Found>(&out)) {
    ++r.found;
    const auto& verts = f->path.verts();
    if (auto defect = antipath_defect(g, verts)) return add_failure(r, t, g, "found path invalid: " + describe(*defect));
    if (f->path.length() != t.k)
      return add_failure(r, t, g, "found path has length " + std::to_string(f->path.length()));
    if (f->path.orientation() != t.orient)
      return add_failure(r, t, g, "found path has orientation " + to_string(f->path.orientation()));
  } else if (const auto* ng = std::get_if<NotGuaranteed>(&out)) {
    ++r.not_guaranteed;
    if (must_find) return add_failure(r, t, g, "NotGuaranteed although the hypothesis holds: " + ng->reason);
  } else {
    const auto& hv = std::get<HypothesisViolation>(out);
    ++r.violations;
    if (!honest(g, hv)) {
      ++r.false_violations;
      return add_failure(r, t, g, "false violation: " + hv.failure.step + " witness " + std::to_string(hv.failure.witness));
    }
    if (must_find) return add_failure(r, t, g, "HypothesisViolation although the hypothesis holds");
  }
  if (with_certificate)
    if (auto problem = certificate_problem(g, out, t)) add_failure(r, t, g, *problem);
}

// Runs one index and turns stray exceptions into recorded failures, since
// nothing may escape an OpenMP region.
template <class F>
SweepReport guarded(std::uint64_t index, F& per_index) {
  try {
    return per_index(index);
  } catch (const std::exception& e) {
    SweepReport r;
    r.failures.push_back({index, 0, 0, Orientation::ForwardFirst, false, false, std::string("exception: ") + e.what(), ""});
    return r;
  }
}

template <class F>
SweepReport run_indexed(const std::string& mode, std::uint64_t count, Execution exec, F per_index) {
  std::vector<SweepReport> parts(count);
  if (exec == Execution::Parallel) {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) parts[i] = guarded(static_cast<std::uint64_t>(i), per_index);
  } else {
    for (std::uint64_t i = 0; i < count; ++i) parts[i] = guarded(i, per_index);
  }
  SweepReport report;
  report.mode = mode;
  for (const auto& part : parts) report.merge(part);
  return report;
}

// Largest k >= 3 allowed by pseudo-semidegree >= (3k-2)/4, or 0.
int largest_k(int pseudo, int n) {
  int k = (4 * pseudo + 2) / 3;
  if (k > n - 1) k = n - 1;
  return k >= 3 ? k : 0;
}

}  // namespace

SweepReport sweep_exhaustive_find(int n, int k, Execution exec) {
  if (k < 3) throw std::invalid_argument("sweep_exhaustive_find: k must be >= 3");
  const OrientedGraphEnumerator graphs = enumerate_oriented_graphs(n);
  const DegreeBound bound = default_bound(k);
  return run_indexed("exhaustive-find n=" + std::to_string(n) + " k=" + std::to_string(k), graphs.size(), exec,
                     [&](std::uint64_t i) {
                       SweepReport r;
                       const OrientedGraph g = graphs.at(i);
                       ++r.instances;
                       if (g.size() == 0) {
                         ++r.skipped;
                         return r;
                       }
                       const bool holds = bound.holds(pseudo_semidegree(g));
                       for (Orientation o : {Orientation::ForwardFirst, Orientation::BackwardFirst}) {
                         Trial t{i, 0, k, o, false, false};
                         const SearchOutcome out = find_antipath(g, k, o);
                         tally(r, g, out, t, holds, false);
                         if (std::holds_alternative<Found>(out) && !has_antipath(g, k, o))
                           add_failure(r, t, g, "oracle disagrees: engine found a path the oracle cannot");
                         if (holds && !has_antipath(g, k, o))
                           add_failure(r, t, g, "oracle finds no antipath although the hypothesis holds");
                         if (!holds) {
                           t.trust = true;
                           DriverOptions trust;
                           trust.trust_hypothesis = true;
                           tally(r, g, find_antipath(g, k, o, trust), t, false, false);
                         }
                       }
                       return r;
                     });
}

SweepReport sweep_exhaustive_longest(int n, int max_k, Execution exec) {
  const OrientedGraphEnumerator graphs = enumerate_oriented_graphs(n);
  return run_indexed("exhaustive-longest n=" + std::to_string(n) + " k<=" + std::to_string(max_k), graphs.size(), exec,
                     [&](std::uint64_t i) {
                       SweepReport r;
                       const OrientedGraph g = graphs.at(i);
                       ++r.instances;
                       const int pseudo = pseudo_semidegree(g);
                       const OracleResult longest = longest_antipath(g);
                       if (!longest.exact) {
                         add_failure(r, {i, 0, 0}, g, "oracle budget exhausted");
                         return r;
                       }
                       for (int k = 1; k <= max_k; ++k) {
                         if (2 * pseudo < k) {
                           ++r.skipped;
                           continue;
                         }
                         ++r.checks;
                         const int m = longest.max_length;
                         if (m < k && m % 2 == 0)
                           add_failure(r, {i, 0, k}, g, "longest antipath has even length " + std::to_string(m) + " < k");
                       }
                       return r;
                     });
}

SweepReport sweep_random_tournaments(int n, int trials, std::uint64_t seed, Execution exec) {
  if (n < 1 || trials < 0) throw std::invalid_argument("sweep_random_tournaments: bad parameters");
  return run_indexed(
      "random-tournaments n=" + std::to_string(n), static_cast<std::uint64_t>(trials), exec, [&](std::uint64_t i) {
        SweepReport r;
        const std::uint64_t s = derive_seed(seed, i);
        const bool rotational = n % 2 == 1 && i % 10 == 9;
        const OrientedGraph g = rotational ? gen_tournament_union(n, 1, s) : gen_random_tournament(n, s);
        ++r.instances;
        const int k = largest_k(pseudo_semidegree(g), n);
        if (k == 0) {
          ++r.skipped;
          return r;
        }
        const Orientation o = i % 2 == 0 ? Orientation::ForwardFirst : Orientation::BackwardFirst;
        Trial t{i, s, k, o, false, false};
        tally(r, g, find_antipath(g, k, o), t, true, true);

        // One past the bound, trusting it anyway: any violation must be honest.
        if (k + 1 <= n - 1) {
          t.k = k + 1;
          t.trust = true;
          DriverOptions trust;
          trust.trust_hypothesis = true;
          tally(r, g, find_antipath(g, k + 1, o, trust), t, false, true);
        }
        return r;
      });
}

SweepReport sweep_dense(int n, int k, int trials, std::uint64_t seed, Execution exec) {
  if (n < 2 || k < 3 || trials < 0) throw std::invalid_argument("sweep_dense: bad parameters");
  const std::int64_t twice_threshold = static_cast<std::int64_t>(3 * k - 4) * n;  // 2 * (3k-4)n/2
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (twice_threshold / 2 >= pairs)
    throw std::invalid_argument("sweep_dense: no oriented graph on " + std::to_string(n) +
                                " vertices exceeds (3k-4)n/2 edges");
  const double t_edges = static_cast<double>(twice_threshold) / 2.0;
  const double p = std::min(1.0, (t_edges + 3.0 * std::sqrt(t_edges) + 1.0) / static_cast<double>(pairs));

  return run_indexed(
      "dense n=" + std::to_string(n) + " k=" + std::to_string(k), static_cast<std::uint64_t>(trials), exec,
      [&, p](std::uint64_t i) {
        SweepReport r;
        const std::uint64_t s = derive_seed(seed, i);
        std::optional<OrientedGraph> sample;
        for (std::uint64_t attempt = 0; attempt < 10'000 && !sample; ++attempt) {
          OrientedGraph g = gen_random_oriented(n, p, derive_seed(s, attempt));
          if (2 * static_cast<std::int64_t>(g.size()) > twice_threshold) sample = std::move(g);
        }
        if (!sample) throw std::runtime_error("could not sample a graph above the edge threshold");
        const OrientedGraph& g = *sample;
        ++r.instances;
        const Orientation o = i % 2 == 0 ? Orientation::ForwardFirst : Orientation::BackwardFirst;
        Trial t{i, s, k, o, true, false};
        tally(r, g, find_antipath_dense(g, k, o), t, true, true);

        // k+1 is above what the edge count guarantees unless the sample is very dense.
        const std::int64_t twice_next = static_cast<std::int64_t>(3 * (k + 1) - 4) * n;
        if (2 * static_cast<std::int64_t>(g.size()) <= twice_next) {
          t.k = k + 1;
          t.trust = true;
          DriverOptions trust;
          trust.trust_hypothesis = true;
          tally(r, g, find_antipath_dense(g, k + 1, o, trust), t, false, true);
        }
        return r;
      });
}

}  // namespace antipath
