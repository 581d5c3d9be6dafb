#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antipath/digraph.hpp"

namespace antipath {

/// Whether an antipath's first edge leaves its first vertex (ForwardFirst)
/// or enters it (BackwardFirst).
enum class Orientation { ForwardFirst, BackwardFirst };

Orientation opposite(Orientation o);
std::string to_string(Orientation o);
/// Accepts "forward-first" / "backward-first".
std::optional<Orientation> parse_orientation(std::string_view text);

struct PathDefect {
  enum class Code { Empty, VertexOutOfRange, NotDistinct, MissingEdge, AmbiguousEdge, NotAlternating, OddCycleLength, TooShort };
  Code code;
  std::size_t index = 0;  ///< offending position in the vertex sequence
};

std::string to_string(PathDefect::Code code);
std::string describe(const PathDefect& defect);

class PathError : public std::runtime_error {
 public:
  explicit PathError(PathDefect defect);
  const PathDefect& defect() const { return defect_; }

 private:
  PathDefect defect_;
};

class AntiPath;
class AntiCycle;

AntiPath validate_antipath(const Digraph& d, std::vector<Vertex> verts);
AntiCycle validate_anticycle(const Digraph& d, std::vector<Vertex> verts);

/// Non-throwing checks; nullopt means the sequence is valid.
std::optional<PathDefect> antipath_defect(const Digraph& d, std::span<const Vertex> verts);
std::optional<PathDefect> anticycle_defect(const Digraph& d, std::span<const Vertex> verts);

/// A vertex sequence v_0..v_m whose consecutive pairs are edges of the host
/// with alternating directions. Only obtainable through validation, or
/// derived from a validated path (reversal, windows).
class AntiPath {
 public:
  const std::vector<Vertex>& verts() const { return verts_; }
  int length() const { return static_cast<int>(verts_.size()) - 1; }
  Vertex front() const { return verts_.front(); }
  Vertex back() const { return verts_.back(); }
  /// Meaningless for length 0; reported as ForwardFirst there.
  Orientation orientation() const { return orientation_; }
  /// Direction of edge j (between v_j and v_{j+1}): true when v_j -> v_{j+1}.
  bool edge_forward(int j) const { return (orientation_ == Orientation::ForwardFirst) == (j % 2 == 0); }

  AntiPath reversed() const;
  /// The k consecutive edges starting at v_start.
  AntiPath window(int start, int k) const;

  friend bool operator==(const AntiPath&, const AntiPath&) = default;

 private:
  AntiPath(std::vector<Vertex> verts, Orientation o) : verts_(std::move(verts)), orientation_(o) {}
  friend AntiPath validate_antipath(const Digraph&, std::vector<Vertex>);

  std::vector<Vertex> verts_;
  Orientation orientation_ = Orientation::ForwardFirst;
};

/// Cyclic sequence v_0..v_m (length m+1, even, >= 4) with alternating edges.
class AntiCycle {
 public:
  const std::vector<Vertex>& verts() const { return verts_; }
  int length() const { return static_cast<int>(verts_.size()); }
  /// True when v_0 -> v_1 (v_0 is a source on the cycle).
  bool starts_with_source() const { return first_source_; }

  friend bool operator==(const AntiCycle&, const AntiCycle&) = default;

 private:
  AntiCycle(std::vector<Vertex> verts, bool first_source) : verts_(std::move(verts)), first_source_(first_source) {}
  friend AntiCycle validate_anticycle(const Digraph&, std::vector<Vertex>);

  std::vector<Vertex> verts_;
  bool first_source_ = true;
};

}  // namespace antipath
