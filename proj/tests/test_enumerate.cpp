#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "kcell/stable.hpp"
#include "kcell/suite.hpp"
#include "oracles.hpp"

using namespace kcell;

namespace {

StableRibbonGraph random_relabel(const StableRibbonGraph& g, Rng& rng) {
  std::vector<int> perm(g.num_edges());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<bool> flip;
  for (int e = 0; e < g.num_edges(); ++e) flip.push_back(rng() & 1);
  return relabel(g, perm, flip);
}

}  // namespace

TEST_CASE("canonical key is invariant under relabeling") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const StableRibbonGraph g(random_stable_graph(rng, 7));
    const auto h = random_relabel(g, rng);
    CHECK(canonical_key(g) == canonical_key(h));
    const auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(g, h, *iso));
  }
}

TEST_CASE("theta and planar theta have different keys") {
  CHECK(canonical_key(fixtures::theta()) != canonical_key(fixtures::planar_theta()));
}

TEST_CASE("canonical keys and automorphisms agree with brute force on small graphs") {
  Rng rng(5);
  std::vector<StableRibbonGraph> pool;
  for (int t = 0; t < 60; ++t) pool.emplace_back(random_stable_graph(rng, 4));
  for (const auto& cls : enumerate_cells(0, 3)) pool.push_back(cls.graph.representative);
  for (const auto& cls : enumerate_cells(1, 1)) pool.push_back(cls.graph.representative);
  for (size_t i = 0; i < pool.size(); ++i) {
    CHECK(automorphisms(pool[i]).order == oracle::count_isomorphisms(pool[i], pool[i]));
    for (size_t j = i + 1; j < pool.size(); j += 3) {
      const bool iso = oracle::count_isomorphisms(pool[i], pool[j]) > 0;
      CHECK(iso == (canonical_key(pool[i]) == canonical_key(pool[j])));
    }
  }
}

TEST_CASE("automorphism orders of small graphs") {
  CHECK(automorphisms(fixtures::theta()).order == 6);
  CHECK(oracle::count_isomorphisms(fixtures::theta(), fixtures::theta()) == 6);
  CHECK(automorphisms(fixtures::segment(1, 1)).order == 2);
  CHECK(automorphisms(fixtures::segment(1, 2)).order == 1);
  // (0,4) classes whose faces all have different degrees have no symmetry.
  int seen = 0;
  for (const auto& cls : enumerate_trivalent(0, 4)) {
    std::vector<int> degrees;
    for (int i = 1; i <= 4; ++i) degrees.push_back(cls.representative.face(i).degree());
    std::sort(degrees.begin(), degrees.end());
    if (std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end()) continue;
    CHECK(cls.automorphism_order == 1);
    if (seen++ < 3) CHECK(oracle::count_isomorphisms(cls.representative, cls.representative) == 1);
  }
  CHECK(seen > 0);
}

TEST_CASE("group elements are automorphisms") {
  for (const auto& cls : enumerate_trivalent(1, 2)) {
    const auto group = automorphisms(cls.representative);
    CHECK(long(group.elements.size()) == group.order);
    for (const auto& p : group.elements) CHECK(is_isomorphism(cls.representative, cls.representative, p));
  }
}

TEST_CASE("trivalent class counts") {
  CHECK(enumerate_trivalent(0, 3).size() == 4);
  const auto one = enumerate_trivalent(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].automorphism_order == 6);
  CHECK(one[0].key == canonical_key(fixtures::theta()));
  CHECK_THROWS_AS(enumerate_trivalent(0, 2), Error);
  CHECK_THROWS_AS(enumerate_trivalent(3, 1), Error);
}

TEST_CASE("mass of trivalent classes matches a sigma0 sweep") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
    Rational mass = 0;
    for (const auto& cls : enumerate_trivalent(g, n)) {
      mass += Rational(1, cls.automorphism_order);
      CHECK(cls.representative.is_trivalent());
      CHECK(cls.representative.num_edges() == 6 * g - 6 + 3 * n);
      CHECK(genus(cls.representative) == g);
      CHECK(cls.representative.num_vertices() - cls.representative.num_edges() + cls.representative.num_faces() ==
            2 - 2 * g);
    }
    CHECK_MESSAGE(mass == oracle::trivalent_mass(g, n), "(g, n) = (" << g << ", " << n << ")");
  }
}

TEST_CASE("signed cell count gives the orbifold Euler characteristic") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}}) {
    Rational sum = 0;
    for (const auto& cls : enumerate_cells(g, n)) {
      if (!cls.graph.representative.is_ordinary()) continue;
      sum += Rational(cls.dimension % 2 ? -1 : 1, cls.graph.automorphism_order);
    }
    const Rational expected = oracle::euler_characteristic(g, n) * (n % 2 ? -1 : 1);
    CHECK_MESSAGE(sum == expected, "(g, n) = (" << g << ", " << n << ")");
  }
}

TEST_CASE("cell closure structure") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}}) {
    const auto cells = enumerate_cells(g, n);
    const int top = top_cell_edges(g, n);
    CHECK(cells.front().dimension == top);
    for (size_t i = 0; i < cells.size(); ++i) {
      CHECK(cells[i].dimension == cells[i].graph.representative.num_edges());
      if (cells[i].dimension < top) CHECK_FALSE(cells[i].parents.empty());
      for (auto [edge, target] : cells[i].boundary) {
        CHECK(cells[target].dimension == cells[i].dimension - 1);
        CHECK(canonical_key(contract_edge(cells[i].graph.representative, edge)) == cells[target].graph.key);
        CHECK(std::count(cells[target].parents.begin(), cells[target].parents.end(), int(i)) == 1);
      }
    }
  }
  // Below two edges every (0,3) contraction would empty a face.
  const auto cells = enumerate_cells(0, 3);
  CHECK(cells.back().dimension == 2);
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_cells(0, 4);
  const auto b = enumerate_cells(0, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].graph.key == b[i].graph.key);
}
