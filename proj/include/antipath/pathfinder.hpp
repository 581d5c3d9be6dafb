#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "antipath/antipath.hpp"
#include "antipath/bound.hpp"
#include "antipath/digraph.hpp"

namespace antipath {

enum class DegreeSide { Out, In };
std::string to_string(DegreeSide side);

/// A step that the degree hypothesis guarantees could not be carried out.
/// The witness is a vertex whose (positive) degree on `side` fails the
/// asserted bound, so the failure is checkable by recomputing degrees.
struct StepFailure {
  std::string step;
  Vertex witness = 0;
  DegreeSide side = DegreeSide::Out;
  int degree = 0;
  DegreeBound asserted;
  std::string detail;
};

template <class T>
using StepResult = std::variant<T, StepFailure>;

/// Precondition of a step was breached by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SearchError : public std::runtime_error {
 public:
  enum class Code { UnsupportedK, EmptyGraph, NoMatchingWindow };
  SearchError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Recompute the witness degree: true iff it matches, is positive, and both
/// it and the graph's pseudo-semidegree fail the asserted bound.
bool violation_is_honest(const Digraph& d, const StepFailure& failure);

/// Extend P by one edge at either end through a vertex off the path, with the
/// direction forced by alternation. Front end first, smallest vertex first.
std::optional<AntiPath> extend_endpoints(const Digraph& d, const AntiPath& p);

/// Rotation for a stuck antipath of even length m: rebuild the path through
/// a chord found by the pigeonhole index search so that a new endpoint appears, then extend it.
/// Requires m >= 2 even, P non-extendable and m < 2D where D is the smallest
/// integer degree allowed by `asserted`.
StepResult<AntiPath> rotate_even_step(const OrientedGraph& d, const AntiPath& p, const DegreeBound& asserted);

/// Close a stuck antipath of odd length m (3 <= m < k) into an anticycle on
/// the same m+1 vertices. Requires 4D >= 3m+1 for the asserted bound.
StepResult<AntiCycle> close_anticycle(const OrientedGraph& d, const AntiPath& p, int k, const DegreeBound& asserted);
StepResult<AntiCycle> close_anticycle(const OrientedGraph& d, const AntiPath& p, int k);

/// Open an anticycle of length m+1 (m < k) into an antipath of length m+1
/// that uses one or two vertices off the cycle. Requires 2D >= m+2.
StepResult<AntiPath> extend_anticycle(const OrientedGraph& d, const AntiCycle& c, int k, const DegreeBound& asserted);
StepResult<AntiPath> extend_anticycle(const OrientedGraph& d, const AntiCycle& c, int k);

/// Leftmost window of k edges of P matching `orient`, then of reverse(P).
std::optional<AntiPath> find_window(const AntiPath& p, int k, Orientation orient);
/// As find_window; throws SearchError(NoMatchingWindow) when none exists.
AntiPath extract_window(const AntiPath& p, int k, Orientation orient);

struct Found {
  AntiPath path;
};

struct NotGuaranteed {
  std::string reason;
  std::optional<AntiPath> best_path;
  std::optional<StepFailure> failure;
  int pseudo_delta0 = 0;
  DegreeBound bound;
  /// Set by the dense driver: degrees above refer to peel(D, threshold).
  std::optional<Rational> peel_threshold;
};

struct HypothesisViolation {
  StepFailure failure;
  /// Set by the dense driver: the witness lives in peel(D, threshold).
  std::optional<Rational> peel_threshold;
};

using SearchOutcome = std::variant<Found, NotGuaranteed, HypothesisViolation>;

enum class StepKind { Seed, ExtendEndpoint, RotateEven, CloseAndExtend, Extract };
std::string to_string(StepKind step);

struct DriverOptions {
  /// Degree hypothesis the driver asserts; defaults to pseudo-semidegree >= (3k-2)/4.
  /// Must be at least as strong as dense_bound(k).
  std::optional<DegreeBound> bound;
  /// Skip the pseudo-semidegree precheck: any step failure is then reported
  /// as HypothesisViolation with its witness instead of NotGuaranteed.
  bool trust_hypothesis = false;
  /// Receives one entry per executed step when non-null.
  std::vector<StepKind>* trace = nullptr;
};

/// Constructive antipath search for k = 1 or k >= 3. Found is guaranteed
/// whenever the pseudo-semidegree satisfies the asserted bound.
/// Throws SearchError(UnsupportedK) for k = 2 or k < 1, SearchError(EmptyGraph)
/// when there is no edge to seed from.
SearchOutcome find_antipath(const OrientedGraph& d, int k, Orientation orient, const DriverOptions& options = {});

/// Edge-density variant: peel at (3k-4)/4, then run the driver on what is
/// left. Found is guaranteed when |E| > (3k-4)|V|/2.
SearchOutcome find_antipath_dense(const OrientedGraph& d, int k, Orientation orient, const DriverOptions& options = {});

}  // namespace antipath
