#include "antipath/fact1.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipath {

namespace {

void normalize(std::vector<UndirectedPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool member(const std::vector<UndirectedPair>& pairs, Vertex u, Vertex v) {
  return std::binary_search(pairs.begin(), pairs.end(), UndirectedPair(u, v));
}

// d_F(v, S): pairs of F joining v to a distinct vertex of S.
int degree_into(const std::vector<UndirectedPair>& pairs, Vertex v, std::vector<Vertex> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  int count = 0;
  for (Vertex s : set)
    if (s != v && member(pairs, v, s)) ++count;
  return count;
}

}  // namespace

Fact1Instance::Fact1Instance(std::vector<Vertex> xs, std::vector<Vertex> ys, std::vector<UndirectedPair> f0,
                             std::vector<UndirectedPair> fm, int ell)
    : xs_(std::move(xs)), ys_(std::move(ys)), f0_(std::move(f0)), fm_(std::move(fm)), ell_(ell) {
  if (xs_.empty() || xs_.size() != ys_.size()) throw std::invalid_argument("Fact1Instance: need |X| == |Y| >= 1");
  if (ell_ < 1 || ell_ > m()) throw std::invalid_argument("Fact1Instance: need 1 <= ell <= m");
  std::vector<Vertex> support(xs_);
  support.insert(support.end(), ys_.begin(), ys_.end());
  std::sort(support.begin(), support.end());
  auto inside = [&](Vertex v) { return std::binary_search(support.begin(), support.end(), v); };
  for (const auto* set : {&f0_, &fm_})
    for (const UndirectedPair& p : *set)
      if (!inside(p.a) || !inside(p.b)) throw std::invalid_argument("Fact1Instance: edge leaves X u Y");
  normalize(f0_);
  normalize(fm_);
}

bool Fact1Instance::in_f0(Vertex u, Vertex v) const { return member(f0_, u, v); }
bool Fact1Instance::in_fm(Vertex u, Vertex v) const { return member(fm_, u, v); }

int Fact1Instance::degree_sum() const {
  return degree_into(f0_, x(0), ys_) + degree_into(fm_, y(m()), xs_);
}

std::optional<int> fact1_index(const Fact1Instance& inst) {
  const int m = inst.m();
  const int ell = inst.ell();
  for (int i = ell; i <= m; ++i)
    if (inst.in_f0(inst.x(0), inst.y(i)) && inst.in_fm(inst.x(i - ell), inst.y(m))) return i;
  return std::nullopt;
}

}  // namespace antipath
