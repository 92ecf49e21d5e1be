#include <doctest.h>

#include "fixtures.hpp"
#include "kcell/stable.hpp"
#include "kcell/suite.hpp"

using namespace kcell;

namespace {

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("theta cell at p = 12 is an open triangle") {
  const CellPolytope c = cell_polytope(fixtures::theta(), ints({12}));
  CHECK_FALSE(c.empty);
  CHECK(c.rank == 1);
  CHECK(c.dimension() == 2);
  CHECK(c.polytope.vertices().size() == 3);
  // {l1, l2 > 0, l1 + l2 < 6}
  CHECK(c.polytope.volume() == 18);
  const RationalVector x = c.polytope.interior_point();
  CHECK(perimeters(c.graph, c.lengths_at(x)) == ints({12}));
}

TEST_CASE("(0,3) cells at generic p: exactly one trivalent class is a point") {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const RationalVector p = random_generic_perimeters(3, rng());
    int nonempty = 0;
    for (const auto& cls : enumerate_trivalent(0, 3)) {
      const CellPolytope c = cell_polytope(cls.representative, p);
      CHECK(c.rank == 3);
      CHECK(c.dimension() == 0);
      if (!c.empty) {
        ++nonempty;
        CHECK(perimeters(c.graph, c.lengths_at({})) == p);
      }
    }
    CHECK(nonempty == 1);
  }
}

TEST_CASE("cell polytopes reproduce their perimeters") {
  Rng rng(4);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}}) {
    for (const auto& cls : enumerate_cells(g, n)) {
      const auto& G = cls.graph.representative;
      const RationalVector p = perimeters(G, random_lengths(rng, G.num_edges()));
      const CellPolytope c = cell_polytope(G, p);
      REQUIRE_FALSE(c.empty);
      CHECK(c.dimension() == G.num_edges() - c.rank);
      const RationalVector x = c.polytope.interior_point();
      const RationalVector l = c.lengths_at(x);
      CHECK(perimeters(G, l) == p);
      for (const auto& li : l) CHECK(li > 0);
    }
  }
}

TEST_CASE("trivalent cells have dimension 6g - 6 + 2n") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}}) {
    const RationalVector p = random_generic_perimeters(n, 99);
    for (const auto& cls : enumerate_trivalent(g, n)) {
      const CellPolytope c = cell_polytope(cls.representative, p);
      if (c.empty) continue;
      CHECK(c.rank == n);
      CHECK(c.dimension() == 6 * g - 6 + 2 * n);
    }
  }
}

TEST_CASE("non-positive perimeters are rejected") {
  CHECK_THROWS_AS(cell_polytope(fixtures::planar_theta(), ints({3, 0, 4})), Error);
  CHECK_THROWS_AS(cell_polytope(fixtures::planar_theta(), ints({3, 4})), Error);
}

TEST_CASE("rank-deficient cells are reported") {
  // Both faces of the two-cycle loop graph see the same two edges.
  const StableRibbonGraph g(
      fixtures::data(R"({"half_edges":4,"vertices":[{"cycles":[[0,2],[1,3]],"defect":0}],"face_labels":{"0":1,"1":2}})"));
  const CellPolytope c = cell_polytope(g, ints({3, 5}));
  CHECK(c.rank_deficient());
  CHECK_FALSE(c.consistent);
  CHECK(c.empty);
  const CellPolytope same = cell_polytope(g, ints({4, 4}));
  CHECK(same.consistent);
  CHECK_FALSE(same.empty);
}

TEST_CASE("fiber integral of alpha") {
  // Two sides of length 1, perimeter 2.
  const PolygonFiber two = polygon_fiber(fixtures::segment(), 1, ints({1}));
  CHECK(two.degree() == 2);
  CHECK(two.perimeter == 2);
  CHECK(fiber_integral_alpha(two) == -1);

  const PolygonFiber six = polygon_fiber(fixtures::theta(), 1, ints({1, 2, 3}));
  CHECK(six.degree() == 6);
  CHECK(fiber_integral_alpha(six) == -1);
  const PolygonFiber scaled = polygon_fiber(fixtures::theta(), 1, {Rational(7, 3), Rational(14, 3), 7});
  CHECK(fiber_integral_alpha(scaled) == -1);

  const FiberComplex fc = alpha_form(six);
  CHECK(fc.complex.validate().ok);
  CHECK(validate_form(fc.complex, fc.alpha).ok);
  CHECK(is_cycle(fc.complex, fc.fundamental));
}

TEST_CASE("fiber integral over every small cell and random lengths") {
  Rng rng(8);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}}) {
    for (const auto& cls : enumerate_cells(g, n)) {
      const auto& G = cls.graph.representative;
      for (int t = 0; t < 5; ++t) {
        const RationalVector l = random_lengths(rng, G.num_edges());
        for (int i = 1; i <= n; ++i) CHECK(fiber_integral_alpha(polygon_fiber(G, i, l)) == -1);
      }
    }
  }
}

TEST_CASE("alpha is a connection form on each cell bundle") {
  Rng rng(1);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}}) {
    for (const auto& cls : enumerate_cells(g, n)) {
      const auto& G = cls.graph.representative;
      const CellPolytope c = cell_polytope(G, perimeters(G, random_lengths(rng, G.num_edges())));
      for (int i = 1; i <= n; ++i) {
        const BasicnessReport r = check_basic(c, i);
        CHECK_MESSAGE(r.ok, r.message);
        CHECK(r.fiber_integral == -1);
      }
    }
  }
}

TEST_CASE("boundary cells") {
  for (const auto& cls : enumerate_trivalent(0, 3)) {
    const auto& G = cls.representative;
    int contractible = 0;
    for (int e = 0; e < G.num_edges(); ++e) contractible += is_contractible(G, {e});
    const auto b = boundary_cells(G);
    CHECK(int(b.size()) == contractible);
    for (const auto& bc : b) CHECK(bc.graph.num_edges() == 2);
  }
  CHECK(boundary_cells(fixtures::figure_eight()).empty());
}

TEST_CASE("default perimeters are odd primes") {
  CHECK(default_perimeters(4) == ints({3, 5, 7, 11}));
}
