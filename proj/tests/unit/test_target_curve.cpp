#include <algorithm>

#include "doctest.h"
#include "msl/error.hpp"
#include "msl/lattice.hpp"
#include "msl/target_curve.hpp"

using namespace msl;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

TargetCurve two_vertex_curve() {
  TargetCurve l;
  l.ambient_dim = 2;
  l.vertices = {{0, 0}, {1, 1}};
  l.edges = {{0, 1, {1, 1}, Rational(1)}};
  l.rays = {{0, {-1, 0}}, {0, {0, -1}}, {1, {1, 0}}, {1, {0, 1}}};
  return l;
}

}  // namespace

TEST_SUITE("target_curve") {
  TEST_CASE("standard lines") {
    const TargetCurve l2 = standard_line(2);
    REQUIRE(l2.rays.size() == 3);
    CHECK(l2.rays[0].direction == IntVector{-1, 0});
    CHECK(l2.rays[1].direction == IntVector{0, -1});
    CHECK(l2.rays[2].direction == IntVector{1, 1});
    CHECK(standard_line(1).rays.size() == 2);
    const TargetCurve l3 = standard_line(3);
    IntVector sum(3, Integer(0));
    for (const auto& r : l3.rays)
      for (int k = 0; k < 3; ++k) sum[k] += r.direction[k];
    CHECK(sum == IntVector(3, Integer(0)));
    for (int q = 1; q <= 6; ++q) CHECK(validate_smooth(standard_line(q)).empty());
    CHECK_THROWS_AS(standard_line(0), InputError);
  }

  TEST_CASE("every q-subset at a smooth vertex is a lattice basis") {
    for (int q = 2; q <= 5; ++q) {
      const TargetCurve l = standard_line(q);
      for (std::size_t skip = 0; skip < l.rays.size(); ++skip) {
        std::vector<IntVector> rows;
        for (std::size_t k = 0; k < l.rays.size(); ++k)
          if (k != skip) rows.push_back(l.rays[k].direction);
        CHECK(gcd_maximal_minors(IntMatrix::from_rows(rows)) == 1);
      }
    }
  }

  TEST_CASE("violations") {
    TargetCurve l = standard_line(2);
    l.rays[2].direction = {2, 2};
    auto v = validate_smooth(l);
    CHECK(has_code(v, "non-primitive"));

    l = standard_line(2);
    l.rays[2].direction = {1, 2};
    CHECK_FALSE(validate_smooth(l).empty());

    // subdividing a ray of the standard line creates a 2-valent vertex
    l = standard_line(2);
    l.vertices.push_back({1, 1});
    l.edges.push_back({0, 1, {1, 1}, Rational(1)});
    l.rays[2].vertex = 1;
    CHECK(has_code(validate_smooth(l), "2-valent vertex"));

    CHECK(validate_smooth(two_vertex_curve()).empty());
    l = two_vertex_curve();
    l.vertices[1] = {2, 1};
    CHECK(has_code(validate_smooth(l), "geometry"));
    l = two_vertex_curve();
    l.edges[0].length = 0;
    CHECK(has_code(validate_smooth(l), "length"));

    // a non-unimodular trivalent vertex that still balances
    l = TargetCurve{};
    l.ambient_dim = 2;
    l.vertices = {{0, 0}};
    l.rays = {{0, {1, 0}}, {0, {1, 2}}, {0, {-2, -2}}};
    CHECK_FALSE(validate_smooth(l).empty());
  }

  TEST_CASE("links") {
    const TargetCurve l = standard_line(2);
    LocalLink k = link_at(l, {{CellKind::Vertex, 0}, Rational(0)});
    CHECK(k.kind == LinkKind::VertexLink);
    CHECK(k.q == 2);
    k = link_at(l, {{CellKind::Ray, 1}, Rational(3)});
    CHECK(k.kind == LinkKind::EdgeLink);
    CHECK(k.directions.front() == IntVector{0, -1});
    k = link_at(two_vertex_curve(), {{CellKind::Edge, 0}, Rational(1, 2)});
    CHECK(k.kind == LinkKind::EdgeLink);
    CHECK(k.directions.front() == IntVector{1, 1});
    CHECK(link_at(two_vertex_curve(), {{CellKind::Vertex, 1}, Rational(0)}).q == 2);
  }

  TEST_CASE("points on cells") {
    const TargetCurve l = two_vertex_curve();
    CHECK(l.point({{CellKind::Edge, 0}, Rational(1, 3)}) == RatVector{Rational(1, 3), Rational(1, 3)});
    CHECK(l.point({{CellKind::Ray, 2}, Rational(2)}) == RatVector{3, 1});
  }

  TEST_CASE("ray of direction") {
    const TargetCurve l = standard_line(2);
    auto m = ray_of_direction(l, 0, IntVector{2, 2});
    CHECK(m.branch.cell == Cell{CellKind::Ray, 2});
    CHECK(m.multiplicity == 2);
    m = ray_of_direction(l, 0, IntVector{-1, 0});
    CHECK(m.branch.cell == Cell{CellKind::Ray, 0});
    CHECK(m.multiplicity == 1);
    CHECK_THROWS_WITH_AS(ray_of_direction(l, 0, IntVector{1, -1}), "direction not along L", DomainError);
    CHECK_THROWS_AS(ray_of_direction(l, 0, IntVector{-2, -2}), DomainError);
    const TargetCurve t = two_vertex_curve();
    m = ray_of_direction(t, 1, IntVector{-3, -3});
    CHECK(m.branch.cell == Cell{CellKind::Edge, 0});
    CHECK(m.multiplicity == 3);
  }
}
