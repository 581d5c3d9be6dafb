#include "antipath/antipath.hpp"

#include <algorithm>

namespace antipath {

Orientation opposite(Orientation o) {
  return o == Orientation::ForwardFirst ? Orientation::BackwardFirst : Orientation::ForwardFirst;
}

std::string to_string(Orientation o) { return o == Orientation::ForwardFirst ? "forward-first" : "backward-first"; }

std::optional<Orientation> parse_orientation(std::string_view text) {
  if (text == "forward-first") return Orientation::ForwardFirst;
  if (text == "backward-first") return Orientation::BackwardFirst;
  return std::nullopt;
}

std::string to_string(PathDefect::Code code) {
  switch (code) {
    case PathDefect::Code::Empty: return "Empty";
    case PathDefect::Code::VertexOutOfRange: return "VertexOutOfRange";
    case PathDefect::Code::NotDistinct: return "NotDistinct";
    case PathDefect::Code::MissingEdge: return "MissingEdge";
    case PathDefect::Code::AmbiguousEdge: return "AmbiguousEdge";
    case PathDefect::Code::NotAlternating: return "NotAlternating";
    case PathDefect::Code::OddCycleLength: return "OddCycleLength";
    case PathDefect::Code::TooShort: return "TooShort";
  }
  return "PathDefect";
}

std::string describe(const PathDefect& defect) {
  return to_string(defect.code) + "(" + std::to_string(defect.index) + ")";
}

PathError::PathError(PathDefect defect) : std::runtime_error(describe(defect)), defect_(defect) {}

namespace {

std::optional<PathDefect> common_defect(const Digraph& d, std::span<const Vertex> verts) {
  if (verts.empty()) return PathDefect{PathDefect::Code::Empty, 0};
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (!d.contains(verts[i])) return PathDefect{PathDefect::Code::VertexOutOfRange, i};
  std::vector<Vertex> sorted(verts.begin(), verts.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    auto first = std::find(verts.begin(), verts.end(), *dup);
    auto second = std::find(first + 1, verts.end(), *dup);
    return PathDefect{PathDefect::Code::NotDistinct, static_cast<std::size_t>(second - verts.begin())};
  }
  return std::nullopt;
}

// Direction of the edge between a and b: +1 for a -> b, -1 for b -> a.
std::optional<PathDefect> pair_direction(const Digraph& d, Vertex a, Vertex b, std::size_t index, int& dir) {
  const bool fwd = d.has_edge(a, b);
  const bool bwd = d.has_edge(b, a);
  if (!fwd && !bwd) return PathDefect{PathDefect::Code::MissingEdge, index};
  if (fwd && bwd) return PathDefect{PathDefect::Code::AmbiguousEdge, index};
  dir = fwd ? 1 : -1;
  return std::nullopt;
}

}  // namespace

std::optional<PathDefect> antipath_defect(const Digraph& d, std::span<const Vertex> verts) {
  if (auto defect = common_defect(d, verts)) return defect;
  int prev = 0;
  for (std::size_t j = 0; j + 1 < verts.size(); ++j) {
    int dir = 0;
    if (auto defect = pair_direction(d, verts[j], verts[j + 1], j, dir)) return defect;
    if (j > 0 && dir == prev) return PathDefect{PathDefect::Code::NotAlternating, j};
    prev = dir;
  }
  return std::nullopt;
}

std::optional<PathDefect> anticycle_defect(const Digraph& d, std::span<const Vertex> verts) {
  if (verts.empty()) return PathDefect{PathDefect::Code::Empty, 0};
  if (verts.size() % 2 == 1) return PathDefect{PathDefect::Code::OddCycleLength, verts.size()};
  if (verts.size() < 4) return PathDefect{PathDefect::Code::TooShort, verts.size()};
  if (auto defect = common_defect(d, verts)) return defect;
  const std::size_t len = verts.size();
  std::vector<int> dirs(len);
  for (std::size_t j = 0; j < len; ++j)
    if (auto defect = pair_direction(d, verts[j], verts[(j + 1) % len], j, dirs[j])) return defect;
  for (std::size_t j = 0; j < len; ++j)
    if (dirs[j] == dirs[(j + len - 1) % len]) return PathDefect{PathDefect::Code::NotAlternating, j};
  return std::nullopt;
}

AntiPath validate_antipath(const Digraph& d, std::vector<Vertex> verts) {
  if (auto defect = antipath_defect(d, verts)) throw PathError(*defect);
  const bool forward = verts.size() < 2 || d.has_edge(verts[0], verts[1]);
  return AntiPath(std::move(verts), forward ? Orientation::ForwardFirst : Orientation::BackwardFirst);
}

AntiCycle validate_anticycle(const Digraph& d, std::vector<Vertex> verts) {
  if (auto defect = anticycle_defect(d, verts)) throw PathError(*defect);
  const bool source = d.has_edge(verts[0], verts[1]);
  return AntiCycle(std::move(verts), source);
}

AntiPath AntiPath::reversed() const {
  AntiPath r = *this;
  std::reverse(r.verts_.begin(), r.verts_.end());
  const int m = length();
  if (m >= 1) {
    // The reversed path starts with the old last edge, seen from v_m.
    const bool last_forward = edge_forward(m - 1);
    r.orientation_ = last_forward ? Orientation::BackwardFirst : Orientation::ForwardFirst;
  }
  return r;
}

AntiPath AntiPath::window(int start, int k) const {
  if (start < 0 || k < 0 || start + k > length()) throw std::out_of_range("AntiPath::window");
  AntiPath w(std::vector<Vertex>(verts_.begin() + start, verts_.begin() + start + k + 1), orientation_);
  if (k >= 1) w.orientation_ = edge_forward(start) ? Orientation::ForwardFirst : Orientation::BackwardFirst;
  return w;
}

}  // namespace antipath
