#include "hexwalk/domain.hpp"

#include <set>
#include <stdexcept>

namespace hexwalk {

namespace {

const PartLabel kStart{"a", 3, 0};
// Trapezoid parts.
const PartLabel kAPlus{"A+", 3, 3};
const PartLabel kBPlus{"B+", 2, 2};
const PartLabel kC{"C", 0, 0};
const PartLabel kBMinus{"B-", 4, -2};
const PartLabel kAMinus{"A-", 3, -3};
// Slit plane parts.
const PartLabel kA1{"A1", 4, 4};
const PartLabel kA2{"A2", 2, -4};

bool exactly_one_inside(const Domain& d, Edge e) {
  return d.contains(e.u) != d.contains(e.v);
}

}  // namespace

std::vector<Edge> Domain::border_edges(std::int64_t radius) const {
  std::set<Edge> out;
  if (finite) {
    for (Vertex v : vertices)
      for (Vertex u : neighbors(v))
        if (!contains(u)) out.insert(Edge(v, u));
  } else {
    for (std::int64_t p = -radius; p <= radius; ++p)
      for (std::int64_t q = -radius; q <= radius; ++q) {
        const Vertex v{p, q};
        if (!contains(v)) continue;
        for (Vertex u : neighbors(v)) {
          if (u.p < -radius || u.p > radius || u.q < -radius || u.q > radius)
            continue;
          if (!contains(u)) out.insert(Edge(v, u));
        }
      }
  }
  return {out.begin(), out.end()};
}

OrientedEdge Domain::oriented_away(Edge e) const {
  if (!exactly_one_inside(*this, e))
    throw std::invalid_argument("oriented_away: not a border edge of " + name);
  return {e, contains(e.u) ? e.u : e.v};
}

Domain trapezoid(int r, int s) {
  if (r < 2 || s < 2)
    throw std::out_of_range("trapezoid: parameters must be >= 2");

  Domain d;
  d.name = "trapezoid:" + std::to_string(r) + "," + std::to_string(s);
  d.finite = true;
  d.source = {0, 0};
  d.entry = {1, 0};
  d.start = Edge(d.source, d.entry);
  d.contains = [r, s](Vertex v) {
    if (v.p < 1 || v.p > r) return false;
    const std::int64_t h = 2LL * s + v.p - 2;
    return v.q >= -h && v.q <= h;
  };
  for (int p = 1; p <= r; ++p) {
    const std::int64_t h = 2LL * s + p - 2;
    for (std::int64_t q = -h; q <= h; ++q) d.vertices.push_back({p, q});
  }

  auto contains = d.contains;
  const Edge start = d.start;
  d.part_of = [contains, start, r](Edge e) -> const PartLabel* {
    if (contains(e.u) == contains(e.v)) return nullptr;
    if (e == start) return &kStart;
    if (e.horizontal()) {
      const Vertex outside = contains(e.u) ? e.v : e.u;
      if (outside.p == 0) return e.u.q > 0 ? &kAPlus : &kAMinus;
      if (outside.p == r + 1) return &kC;
      return nullptr;
    }
    // Vertical: Edge stores the bottom vertex first.
    return contains(e.u) ? &kBPlus : &kBMinus;
  };

  const std::int64_t top = 2LL * s - 2;
  auto part_of = d.part_of;
  d.far_border = [part_of, top](Edge e) {
    const PartLabel* part = part_of(e);
    if (part == nullptr || part == &kStart) return false;
    if (part == &kBPlus || part == &kBMinus || part == &kC) return true;
    // The two extreme horizontal edges of the A parts.
    return e.u.q == top || e.u.q == -top;
  };
  return d;
}

Domain slit_plane() {
  Domain d;
  d.name = "slitplane";
  d.finite = false;
  d.source = {0, 0};
  d.entry = {1, 0};
  d.start = Edge(d.source, d.entry);
  d.contains = [](Vertex v) {
    return !(v.p <= 0 && v.q >= v.p - 1 && v.q <= 1 - v.p);
  };
  auto contains = d.contains;
  const Edge start = d.start;
  d.part_of = [contains, start](Edge e) -> const PartLabel* {
    if (contains(e.u) == contains(e.v)) return nullptr;
    if (e == start) return &kStart;
    if (e.horizontal()) return nullptr;  // cannot occur on the border
    return e.u.q >= 1 ? &kA1 : &kA2;
  };
  d.far_border = [](Edge) { return false; };
  return d;
}

Domain halfplane() {
  Domain d;
  d.name = "halfplane";
  d.finite = false;
  d.source = {0, 0};
  d.entry = {1, 0};
  d.start = Edge(d.source, d.entry);
  d.contains = [](Vertex v) { return v.p >= 1; };
  d.part_of = [](Edge) -> const PartLabel* { return nullptr; };
  d.far_border = [](Edge) { return false; };
  return d;
}

std::vector<Edge> trapezoid_far_border_by_sides(int r, int s) {
  const Domain d = trapezoid(r, s);
  std::set<Vertex> sides;  // top, right and bottom side vertex sets
  for (int p = 1; p <= r; ++p) {
    const std::int64_t h = 2LL * s + p - 2;
    sides.insert({p, h});
    sides.insert({p, h - 1});
    sides.insert({p, -h});
    sides.insert({p, -(h - 1)});
  }
  const std::int64_t h = 2LL * s + r - 2;
  for (std::int64_t q = -h; q <= h; ++q) sides.insert({r, q});

  std::vector<Edge> out;
  for (Edge e : d.border_edges()) {
    const Vertex inside = d.contains(e.u) ? e.u : e.v;
    if (sides.count(inside)) out.push_back(e);
  }
  return out;
}

}  // namespace hexwalk
