#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace hexwalk {

// The brick-wall drawing of the hexagonal lattice: vertices are all of Z^2,
// every vertical unit edge is present, and a horizontal unit edge is present
// exactly when its left endvertex has coordinates of equal parity. Every
// vertex has degree 3.
struct Vertex {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex mirror(Vertex v) { return {v.p, -v.q}; }

inline bool same_parity(std::int64_t a, std::int64_t b) {
  return ((a ^ b) & 1) == 0;
}

inline bool edge_exists(Vertex u, Vertex v) {
  if (u.p == v.p) {
    const std::int64_t dq = u.q - v.q;
    return dq == 1 || dq == -1;  // vertical edges always present
  }
  if (u.q != v.q) return false;
  const std::int64_t dp = u.p - v.p;
  if (dp != 1 && dp != -1) return false;
  const Vertex left = dp == 1 ? v : u;
  return same_parity(left.p, left.q);
}

// Unordered pair of adjacent vertices, stored with u < v so that equal edges
// compare equal. Existence in the lattice is validated by the operations
// that need it, not by the constructor.
struct Edge {
  Vertex u, v;
  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a), v(b) {
    if (v < u) {
      const Vertex t = u;
      u = v;
      v = t;
    }
  }
  bool incident(Vertex w) const { return w == u || w == v; }
  Vertex other(Vertex w) const {
    if (w == u) return v;
    if (w == v) return u;
    throw std::invalid_argument("Edge::other: vertex not on edge");
  }
  bool horizontal() const { return u.q == v.q; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An edge together with the endvertex it points away from.
struct OrientedEdge {
  Edge edge;
  Vertex tail;
};

// The three neighbours of v: its unique horizontal neighbour (right when the
// coordinates have equal parity, left otherwise), then the one above, then
// the one below.
inline std::array<Vertex, 3> neighbors(Vertex v) {
  const Vertex horiz =
      same_parity(v.p, v.q) ? Vertex{v.p + 1, v.q} : Vertex{v.p - 1, v.q};
  return {horiz, Vertex{v.p, v.q + 1}, Vertex{v.p, v.q - 1}};
}

// Direction exponent of the step cur -> u, assuming the two are adjacent.
// Horizontal edges have basic exponent 0; a vertical edge has basic exponent
// 1 when the top vertex's horizontal edge goes right and 2 when it goes left.
// Traversing against the left-right / bottom-up basic orientation adds 3.
inline int step_exponent(Vertex cur, Vertex u) {
  if (u.q == cur.q) return u.p > cur.p ? 0 : 3;
  const Vertex top = u.q > cur.q ? u : cur;
  const int k = same_parity(top.p, top.q) ? 1 : 2;
  return u.q > cur.q ? k : k + 3;
}

// Exponent k of the direction label zeta^k for e traversed away from `from`.
// Reversing the traversal adds 3 mod 6, so the labels of the two
// orientations sum to zero as complex numbers.
inline int direction_exponent(const Edge& e, Vertex from) {
  if (!edge_exists(e.u, e.v))
    throw std::invalid_argument("direction_exponent: not an edge of the lattice");
  if (!e.incident(from))
    throw std::invalid_argument("direction_exponent: vertex not on edge");
  return step_exponent(from, e.other(from));
}

inline int direction_exponent(const OrientedEdge& oe) {
  return direction_exponent(oe.edge, oe.tail);
}

// A walk is a vertex sequence with >= 2 entries; edges are implied.
using Walk = std::vector<Vertex>;

inline Walk mirror(const Walk& w) {
  Walk out;
  out.reserve(w.size());
  for (Vertex v : w) out.push_back(mirror(v));
  return out;
}

inline Walk reversed(const Walk& w) { return Walk(w.rbegin(), w.rend()); }

struct VertexHash {
  std::size_t operator()(const Vertex& v) const {
    std::uint64_t x = static_cast<std::uint64_t>(v.p) * 0x9e3779b97f4a7c15ULL ^
                      static_cast<std::uint64_t>(v.q);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return static_cast<std::size_t>(x);
  }
};

using VertexSet = std::unordered_set<Vertex, VertexHash>;

// Consecutive vertices adjacent and no backtrack (e_j != e_{j+1}).
inline bool is_walk(const Walk& w) {
  if (w.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!edge_exists(w[i], w[i + 1])) return false;
    if (i + 2 < w.size() && w[i + 2] == w[i]) return false;
  }
  return true;
}

inline bool is_saw(const Walk& w) {
  if (!is_walk(w)) return false;
  VertexSet seen(w.size() * 2);
  for (Vertex v : w)
    if (!seen.insert(v).second) return false;
  return true;
}

// First vertex equals the last and that is the only coincidence.
inline bool is_closed_saw(const Walk& w) {
  if (!is_walk(w) || w.front() != w.back()) return false;
  VertexSet seen(w.size() * 2);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!seen.insert(w[i]).second) return false;
  return true;
}

// All vertices distinct except that the final one may coincide with one
// earlier vertex.
inline bool is_weak_saw(const Walk& w) {
  if (!is_walk(w)) return false;
  VertexSet seen(w.size() * 2);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!seen.insert(w[i]).second) return false;
  return true;  // the last vertex is unconstrained
}

}  // namespace hexwalk
