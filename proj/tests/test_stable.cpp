#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "kcell/stable.hpp"
#include "kcell/suite.hpp"

using namespace kcell;

namespace {

// One vertex with cycles (0 2) and (1 3); edge 0 joins the two cycles.
StableRibbonGraph two_cycle_vertex() {
  return StableRibbonGraph(
      fixtures::data(R"({"half_edges":4,"vertices":[{"cycles":[[0,2],[1,3]],"defect":0}],"face_labels":{"0":1,"1":2}})"));
}

}  // namespace

TEST_CASE("contracting a theta edge merges the two vertices") {
  const auto g = fixtures::theta();
  const auto h = contract_edge(g, 0);
  CHECK(h.num_vertices() == 1);
  CHECK(h.num_edges() == 2);
  CHECK(h.degree(0) == 4);
  CHECK(h.vertices()[0].cycles.size() == 1);
  CHECK(h.defect(0) == 0);
  CHECK(h.num_faces() == 1);
  CHECK(genus(h) == 1);
  CHECK(h.is_stable());
}

TEST_CASE("a loop joining two cycles of a vertex raises its defect") {
  const auto g = two_cycle_vertex();
  REQUIRE(g.is_loop(0));
  REQUIRE(g.cycle_of(0) != g.cycle_of(1));
  REQUIRE(is_contractible(g, {0}));
  const auto h = contract_edge(g, 0);
  CHECK(h.defect(0) == 1);
  CHECK(genus(h) == genus(g));
  CHECK(h.num_faces() == 2);
}

TEST_CASE("a loop inside one cycle keeps the defect") {
  // sigma0 = (0 2 1 3): the loop 0 has both halves in one cycle and borders
  // two faces that keep other edges.
  const auto g = StableRibbonGraph(
      fixtures::data(R"({"half_edges":4,"vertices":[{"cycles":[[0,2,1,3]],"defect":0}],"face_labels":{"0":1}})"));
  REQUIRE(g.num_faces() == 1);
  REQUIRE(is_contractible(g, {0}));
  const auto h = contract_edge(g, 0);
  CHECK(h.defect(0) == 0);
  CHECK(genus(h) == genus(g));
}

TEST_CASE("an edge forming a face alone cannot be contracted") {
  const auto g = fixtures::figure_eight();
  CHECK_FALSE(is_contractible(g, {0}));
  CHECK_FALSE(is_contractible(g, {1}));
  CHECK_THROWS_AS(contract_edge(g, 0), Error);
  CHECK_THROWS_AS(contract_set(g, {0, 1}), Error);
}

TEST_CASE("contract_set on the empty set is the identity") {
  const auto g = fixtures::theta();
  CHECK(contract_set(g, {}).data() == g.data());
}

TEST_CASE("contracting two theta edges agrees with both sequential orders") {
  const auto g = fixtures::theta();
  REQUIRE(is_contractible(g, {0, 1}));
  const auto both = contract_set(g, {0, 1});
  CHECK(both.num_vertices() == 1);
  CHECK(both.num_edges() == 1);
  CHECK(genus(both) == 1);
  const auto a = contract_edge_mapped(g, 0);
  const auto b = contract_edge_mapped(g, 1);
  CHECK(canonical_key(contract_edge(a.graph, a.edge_map[1])) == canonical_key(both));
  CHECK(canonical_key(contract_edge(b.graph, b.edge_map[0])) == canonical_key(both));
}

TEST_CASE("two separate components contract independently") {
  bool found = false;
  for (const auto& cls : enumerate_trivalent(0, 4)) {
    const auto& g = cls.representative;
    for (int e = 0; e < g.num_edges() && !found; ++e) {
      for (int f = e + 1; f < g.num_edges() && !found; ++f) {
        const std::set<int> ve{g.vertex_of(2 * e), g.vertex_of(2 * e + 1)};
        if (ve.count(g.vertex_of(2 * f)) || ve.count(g.vertex_of(2 * f + 1))) continue;
        if (!is_contractible(g, {e, f})) continue;
        const auto plan = make_plan(g, {e, f});
        CHECK(plan.components.size() == 2);
        const auto ce = contract_edge_mapped(g, e);
        CHECK(canonical_key(contract_set(g, {e, f})) == canonical_key(contract_edge(ce.graph, ce.edge_map[f])));
        found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("induced component graphs") {
  const auto g = fixtures::theta();
  CHECK(canonical_key(induced_component_graph(g, {0, 1, 2})) == canonical_key(g));
  const auto one = induced_component_graph(g, {0});
  CHECK(one.num_vertices() == 2);
  CHECK(one.num_edges() == 1);
  CHECK(one.num_faces() == 1);
  const auto loop = induced_component_graph(fixtures::figure_eight(), {0});
  CHECK(loop.num_vertices() == 1);
  CHECK(loop.num_edges() == 1);
  CHECK(genus(loop) == 0);
}

TEST_CASE("contraction laws on enumerated and random graphs") {
  Rng rng(7);
  std::vector<SuiteFailure> failures;
  long cases = 0;
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}}) {
    for (const auto& cell : enumerate_cells(g, n)) cases += check_contraction_laws(cell.graph.representative, rng, 64, failures);
  }
  for (int t = 0; t < 200; ++t) cases += check_contraction_laws(StableRibbonGraph(random_stable_graph(rng, 7)), rng, 16, failures);
  CHECK(cases > 1000);
  for (const auto& f : failures) FAIL_CHECK(f.check << ": " << f.message << " " << f.input.dump());
}

TEST_CASE("random stable graphs are valid and stable") {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto d = random_stable_graph(rng, 8);
    REQUIRE(validate(d).ok());
    const StableRibbonGraph g(d);
    CHECK(g.num_edges() <= 8);
    CHECK(g.is_stable());
  }
}
