#pragma once

#include "hexwalk/lattice.hpp"

namespace hexwalk {

// Hook weight read off the direction exponents of the two steps: +1 when the
// exponent advances by one, -1 when it recedes by one. Both steps are taken
// in the walking direction. Any other difference means the input was not a
// genuine hook.
inline int hook_from_exponents(int prev, int next) {
  const int d = ((next - prev) % 6 + 6) % 6;
  if (d == 1) return 1;
  if (d == 5) return -1;
  throw std::invalid_argument("hook: exponent difference is not +-1 mod 6");
}

// Weight of the hook e1 e2 with the given central vertex, e1 traversed into
// the center and e2 away from it.
inline int hook_weight(const Edge& e1, const Edge& e2, Vertex center) {
  if (e1 == e2) throw std::invalid_argument("hook_weight: edges coincide");
  if (!e1.incident(center) || !e2.incident(center))
    throw std::invalid_argument("hook_weight: edge not incident with center");
  return hook_from_exponents(direction_exponent(e1, e1.other(center)),
                             direction_exponent(e2, center));
}

// Sum of hook weights over the interior vertices of w; 0 for a single edge.
inline long long winding(const Walk& w) {
  if (!is_walk(w)) throw std::invalid_argument("winding: malformed walk");
  long long r = 0;
  int prev = step_exponent(w[0], w[1]);
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    const int next = step_exponent(w[i], w[i + 1]);
    r += hook_from_exponents(prev, next);
    prev = next;
  }
  return r;
}

// Winding of a closed walk plus the weight of the closing hook, i.e. the hook
// whose central vertex is the shared first/final vertex. Always a multiple
// of 6 for closed walks.
inline long long complete_winding(const Walk& w) {
  if (w.size() < 2 || w.front() != w.back())
    throw std::invalid_argument("complete_winding: walk is not closed");
  const long long r = winding(w);
  const int last = step_exponent(w[w.size() - 2], w.back());
  const int first = step_exponent(w[0], w[1]);
  return r + hook_from_exponents(last, first);
}

}  // namespace hexwalk
