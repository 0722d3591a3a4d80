#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "hexwalk/domain.hpp"

using namespace hexwalk;

TEST_CASE("trapezoid membership and vertex count") {
  const Domain d = trapezoid(2, 2);
  CHECK(d.vertex_count() == 16);  // 7 vertices at p=1 plus 9 at p=2
  CHECK(d.contains({1, 3}));
  CHECK_FALSE(d.contains({1, 4}));
  CHECK_FALSE(d.contains({0, 0}));
  CHECK(d.contains({2, -4}));
  CHECK_FALSE(d.contains({3, 0}));
  CHECK_THROWS_AS(trapezoid(1, 2), std::out_of_range);
  CHECK_THROWS_AS(trapezoid(2, 1), std::out_of_range);
}

TEST_CASE("trapezoid vertex count stays within the stated bound") {
  for (int r = 2; r <= 6; ++r)
    for (int s = 2; s <= 6; ++s)
      CHECK(trapezoid(r, s).vertex_count() <= r * (4LL * s + 2 * r - 3));
}

TEST_CASE("border edges have exactly one endvertex inside") {
  const Domain d = trapezoid(2, 3);
  const auto border = d.border_edges();
  CHECK(std::set<Edge>(border.begin(), border.end()).count(d.start) == 1);
  for (Edge e : border) CHECK(d.contains(e.u) != d.contains(e.v));
}

TEST_CASE("trapezoid border partition") {
  for (int r = 2; r <= 5; ++r)
    for (int s = 2; s <= 5; ++s) {
      const Domain d = trapezoid(r, s);
      std::map<std::string, int> sizes;
      for (Edge e : d.border_edges()) {
        const PartLabel* part = d.part_of(e);
        REQUIRE(part != nullptr);
        ++sizes[part->name];
      }
      CHECK(sizes["a"] == 1);
      CHECK(sizes["A+"] == s - 1);
      CHECK(sizes["A-"] == s - 1);
      CHECK(sizes["B+"] == r);
      CHECK(sizes["B-"] == r);
      CHECK(sizes["C"] == 2 * s + r - 1);
    }
}

TEST_CASE("away orientation of labelled trapezoid edges") {
  const Domain d = trapezoid(2, 2);
  const OrientedEdge a = d.oriented_away(d.start);
  CHECK(a.tail == Vertex{1, 0});
  CHECK(direction_exponent(a) == 3);  // so the label is -1
  for (Edge e : d.border_edges()) {
    const PartLabel* part = d.part_of(e);
    CHECK(direction_exponent(d.oriented_away(e)) == part->dir_exp);
  }
  CHECK_THROWS_AS(d.oriented_away(Edge({1, 0}, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("mirror parts carry conjugated exponents and negated windings") {
  const Domain d = trapezoid(3, 2);
  std::map<std::string, const PartLabel*> parts;
  for (Edge e : d.border_edges()) parts[d.part_of(e)->name] = d.part_of(e);
  CHECK(parts["A-"]->dir_exp == (6 - parts["A+"]->dir_exp) % 6);
  CHECK(parts["A-"]->winding == -parts["A+"]->winding);
  CHECK(parts["B-"]->dir_exp == (6 - parts["B+"]->dir_exp) % 6);
  CHECK(parts["B-"]->winding == -parts["B+"]->winding);
  // Mirroring a border edge lands in the mirror part.
  for (Edge e : d.border_edges()) {
    const Edge m(mirror(e.u), mirror(e.v));
    const std::string name = d.part_of(e)->name;
    const std::string mirrored = d.part_of(m)->name;
    if (name == "A+") CHECK(mirrored == "A-");
    if (name == "B-") CHECK(mirrored == "B+");
    if (name == "C" || name == "a") CHECK(mirrored == name);
  }
}

TEST_CASE("slit plane membership") {
  const Domain d = slit_plane();
  CHECK_FALSE(d.contains({0, 0}));
  CHECK(d.contains({1, 0}));
  CHECK(d.contains({-2, 4}));   // q = 4 above the wedge row 1-p = 3
  CHECK_FALSE(d.contains({-2, 3}));
  CHECK_FALSE(d.contains({-2, -3}));
  CHECK(d.contains({0, 2}));
  CHECK_FALSE(d.contains({0, 1}));
  CHECK_FALSE(d.finite);
}

TEST_CASE("slit plane border edges within a radius") {
  const Domain d = slit_plane();
  const auto border = d.border_edges(3);
  const std::set<Edge> set(border.begin(), border.end());
  CHECK(set.count(Edge({0, 1}, {0, 2})) == 1);
  CHECK(set.count(Edge({0, -1}, {0, -2})) == 1);
  CHECK(set.count(d.start) == 1);
  for (Edge e : border) {
    CHECK(d.contains(e.u) != d.contains(e.v));
    const PartLabel* part = d.part_of(e);
    REQUIRE(part != nullptr);
    if (e != d.start) {
      CHECK_FALSE(e.horizontal());
      CHECK(direction_exponent(d.oriented_away(e)) == part->dir_exp);
    }
  }
  CHECK(d.part_of(Edge({0, 1}, {0, 2}))->name == std::string("A1"));
  CHECK(d.part_of(Edge({0, 1}, {0, 2}))->dir_exp == 4);
  CHECK(d.part_of(Edge({0, 1}, {0, 2}))->winding == 4);
  CHECK(d.part_of(Edge({0, -1}, {0, -2}))->name == std::string("A2"));
  CHECK(d.part_of(Edge({0, -1}, {0, -2}))->winding == -4);
}

TEST_CASE("trapezoid exit set matches the side-incidence characterization") {
  for (int r = 2; r <= 6; ++r)
    for (int s = 2; s <= 6; ++s) {
      const Domain d = trapezoid(r, s);
      std::set<Edge> by_parts;
      for (Edge e : d.border_edges())
        if (d.far_border(e)) by_parts.insert(e);
      const auto by_sides = trapezoid_far_border_by_sides(r, s);
      CHECK(by_parts == std::set<Edge>(by_sides.begin(), by_sides.end()));
    }
}

TEST_CASE("halfplane basics") {
  const Domain d = halfplane();
  CHECK(d.contains({1, -7}));
  CHECK_FALSE(d.contains({0, 3}));
  CHECK(d.part_of(d.start) == nullptr);
  CHECK(d.oriented_away(d.start).tail == Vertex{1, 0});
}
