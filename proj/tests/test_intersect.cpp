#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "kcell/suite.hpp"
#include "oracles.hpp"

using namespace kcell;

TEST_CASE("oracle sanity") {
  CHECK(oracle::witten_kontsevich(0, {0, 0, 0}) == 1);
  CHECK(oracle::witten_kontsevich(1, {1}) == Rational(1, 24));
  CHECK(oracle::witten_kontsevich(0, {1, 0, 0, 0}) == 1);
  CHECK(oracle::witten_kontsevich(2, {4}) == Rational(1, 1152));
  CHECK(oracle::witten_kontsevich(0, {1, 1, 0, 0, 0}) == 2);
  CHECK(oracle::witten_kontsevich(1, {1, 1}) == Rational(1, 24));
  CHECK(oracle::witten_kontsevich(1, {2, 0}) == Rational(1, 24));
  CHECK(oracle::witten_kontsevich(0, {1, 0, 0}) == 0);
  CHECK(oracle::euler_characteristic(1, 1) == Rational(-1, 12));
  CHECK(oracle::euler_characteristic(2, 1) == Rational(1, 120));  // zeta(-3)
}

TEST_CASE("intersection numbers match the recursion") {
  struct Q {
    int g;
    std::vector<int> d;
  };
  for (const Q& q : std::vector<Q>{{0, {0, 0, 0}},
                                   {1, {1}},
                                   {0, {1, 0, 0, 0}},
                                   {0, {0, 0, 1, 0}},
                                   {1, {1, 1}},
                                   {1, {2, 0}},
                                   {1, {0, 2}},
                                   {2, {4}}}) {
    const IntersectionResult r = intersection_number({q.g, q.d, {}, 1});
    CHECK_MESSAGE(r.value == oracle::witten_kontsevich(q.g, q.d), "g=" << q.g << " d[0]=" << q.d[0]);
  }
}

TEST_CASE("results do not depend on the perimeters or the job count") {
  Rng rng(31);
  const auto classes = enumerate_trivalent(1, 2);
  const Rational expected = oracle::witten_kontsevich(1, {2, 0});
  for (int t = 0; t < 3; ++t) {
    const RationalVector p = random_generic_perimeters(2, rng());
    CHECK(intersection_number({1, {2, 0}, p, 1 + t}, classes).value == expected);
  }
}

TEST_CASE("dimension mismatch and the size guard") {
  CHECK_THROWS_AS(intersection_number({0, {1, 0, 0}, {}, 1}), Error);
  CHECK_THROWS_AS(intersection_number({3, {7}, {}, 1}), Error);
  CHECK_THROWS_AS(intersection_number({0, {0, 0, 0}, {Rational(3), Rational(5)}, 1}), Error);
}

TEST_CASE("the ledger adds up") {
  const IntersectionResult r = intersection_number({0, {1, 0, 0, 0}, {}, 1});
  Rational sum = 0;
  int nonempty = 0;
  for (const auto& c : r.ledger) {
    sum += c.contribution;
    if (c.empty) {
      CHECK(c.contribution == 0);
    } else {
      ++nonempty;
      CHECK(c.contribution == c.sign * c.coefficient * c.volume / c.automorphisms);
    }
  }
  CHECK(sum == r.value);
  CHECK(nonempty > 0);
  CHECK(nonempty < int(r.ledger.size()));
}

TEST_CASE("zero-dimensional cells have sign +1 and unit volume") {
  const RationalVector p = random_generic_perimeters(3, 5);
  for (const auto& cls : enumerate_trivalent(0, 3)) {
    const CellContribution c = integrate_cell(cls, {0, 0, 0}, p);
    if (c.empty) continue;
    CHECK(c.sign == 1);
    CHECK(c.volume == 1);
    CHECK(c.contribution == Rational(1, cls.automorphism_order));
  }
}

TEST_CASE("omega does not depend on the starting side and is basic") {
  Rng rng(13);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}}) {
    for (const auto& cls : enumerate_trivalent(g, n)) {
      const auto& G = cls.representative;
      const CellPolytope c = cell_polytope(G, perimeters(G, random_lengths(rng, G.num_edges())));
      for (int i = 1; i <= n; ++i) {
        const LocalForm ref = restrict_to_chart(omega(G, i, c.perimeters[i - 1]).local(), c.chart);
        for (int s = 1; s < G.face(i).degree(); ++s) {
          CHECK(restrict_to_chart(omega(G, i, c.perimeters[i - 1], s).local(), c.chart) == ref);
        }
      }
    }
  }
}

TEST_CASE("contributions do not depend on the chart") {
  Rng rng(19);
  const RationalVector p = random_generic_perimeters(2, 77);
  for (const auto& cls : enumerate_trivalent(1, 2)) {
    const CellContribution base = integrate_cell(cls, {1, 1}, p);
    std::vector<int> order(cls.representative.num_edges());
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < 3; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      const CellContribution other = integrate_cell(cls, {1, 1}, p, order);
      CHECK(other.contribution == base.contribution);
      CHECK(other.sign * other.coefficient * other.volume == base.sign * base.coefficient * base.volume);
    }
  }
}

TEST_CASE("top cells of (1,1) have a non-degenerate reference form") {
  const RationalVector p{Rational(7)};
  const StableRibbonGraph G = enumerate_trivalent(1, 1).front().representative;
  const CellPolytope c = cell_polytope(G, p);
  CHECK(restrict_to_cell(omega_product(G, {1}, p), c) != 0);
  CHECK(orientation_sign(c) != 0);
}

TEST_CASE("a product of too high degree is rejected") {
  const RationalVector p{Rational(7)};
  const StableRibbonGraph G = enumerate_trivalent(1, 1).front().representative;
  const CellPolytope c = cell_polytope(G, p);
  CHECK_THROWS_AS(restrict_to_cell(omega_product(G, {2}, p), c), Error);
}

TEST_CASE("permuting d together with p") {
  const RationalVector p = random_generic_perimeters(4, 3);
  const Rational base = intersection_number({0, {1, 0, 0, 0}, p, 1}).value;
  for (int slot = 1; slot < 4; ++slot) {
    std::vector<int> d(4, 0);
    d[slot] = 1;
    RationalVector q = p;
    std::swap(q[0], q[slot]);
    CHECK(intersection_number({0, d, q, 1}).value == base);
  }
}
