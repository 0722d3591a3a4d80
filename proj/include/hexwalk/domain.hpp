#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hexwalk/lattice.hpp"

namespace hexwalk {

// A named group of border edges sharing their away-from-the-domain direction
// exponent and the common winding of walks that end in them.
struct PartLabel {
  const char* name;
  int dir_exp;
  long long winding;
};

// Connected vertex set with a designated start edge on its border. Immutable
// after construction; predicates are pure.
struct Domain {
  std::string name;
  bool finite = false;
  Edge start;     // the border edge `a`
  Vertex source;  // endvertex of `start` outside the domain
  Vertex entry;   // endvertex of `start` inside the domain
  std::function<bool(Vertex)> contains;
  // Part of a border edge, nullptr when unlabelled. Non-border edges also
  // map to nullptr.
  std::function<const PartLabel*(Edge)> part_of;
  // Border edges counted in the trapezoidal exit class (the vertical and
  // right-hand parts plus the two extreme horizontal edges); empty predicate
  // for other domains.
  std::function<bool(Edge)> far_border;
  std::vector<Vertex> vertices;  // populated for finite domains only

  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(vertices.size());
  }

  // All border edges of a finite domain; for an infinite domain, the border
  // edges with both endvertices within the given L-infinity radius of the
  // origin. Sorted.
  std::vector<Edge> border_edges(std::int64_t radius = 0) const;

  // The border edge oriented away from its endvertex inside the domain.
  OrientedEdge oriented_away(Edge e) const;
};

// {(p,q) : 1 <= p <= r, |q| <= 2s+p-2} with start edge (0,0)(1,0).
// Border parts: a, A+ (horizontal, above the axis), B+ (vertical, above),
// C (horizontal, right), B- and A- their mirror images. Requires r,s >= 2.
Domain trapezoid(int r, int s);

// Z^2 minus the wedge {(p,q) : p <= 0, p-1 <= q <= 1-p}, start edge
// (0,0)(1,0). All border edges except the start edge are vertical: A1 above
// the axis, A2 = mirror(A1) below.
Domain slit_plane();

// {p >= 1} with start edge (0,0)(1,0); border edges are unlabelled.
Domain halfplane();

// The trapezoid exit edges derived from the side vertex sets (top, right and
// bottom); used to cross-check Domain::far_border. Sorted.
std::vector<Edge> trapezoid_far_border_by_sides(int r, int s);

}  // namespace hexwalk
