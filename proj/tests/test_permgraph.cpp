#include <doctest.h>

#include "fixtures.hpp"

using namespace kcell;

namespace {

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("theta graph is valid with a single six-sided face") {
  const auto g = fixtures::theta();
  CHECK(validate(g.data()).ok());
  REQUIRE(g.num_faces() == 1);
  CHECK(g.face(1).half_edges == std::vector<int>{0, 5, 2, 1, 4, 3});
  CHECK(g.face(1).edges == std::vector<int>{0, 2, 1, 0, 2, 1});
  CHECK(genus(g) == 1);
  CHECK(g.is_trivalent());
  CHECK(g.is_stable());
}

TEST_CASE("sigma2 is sigma0 inverse after sigma1") {
  for (const auto& g : {fixtures::theta(), fixtures::planar_theta(), fixtures::figure_eight()}) {
    for (int h = 0; h < g.num_half_edges(); ++h) {
      CHECK(g.sigma2(h) == g.sigma0_inv(StableRibbonGraph::sigma1(h)));
      CHECK(g.sigma0(g.sigma0_inv(h)) == h);
    }
  }
}

TEST_CASE("planar theta has three faces and genus zero") {
  const auto g = fixtures::planar_theta();
  CHECK(g.num_faces() == 3);
  CHECK(genus(g) == 0);
  CHECK(perimeters(g, ints({1, 2, 3})) == ints({3, 5, 4}));
}

TEST_CASE("perimeters count an edge twice when it borders a face on both sides") {
  CHECK(perimeters(fixtures::theta(), ints({1, 2, 3})) == ints({12}));
  const auto m = face_edge_incidence(fixtures::theta());
  CHECK(m == std::vector<std::vector<int>>{{2, 2, 2}});
  CHECK_THROWS_AS(perimeters(fixtures::theta(), ints({0, 0, 0})), Error);
  CHECK_THROWS_AS(perimeters(fixtures::theta(), ints({1, 2})), Error);
}

TEST_CASE("segment with two defect-one ends") {
  const auto g = fixtures::segment();
  CHECK(g.num_faces() == 1);
  CHECK(g.face(1).half_edges == std::vector<int>{0, 1});
  for (int h = 0; h < 2; ++h) CHECK(g.sigma2(h) == StableRibbonGraph::sigma1(h));
  CHECK(genus(g) == 2);
  CHECK(g.is_stable());
  CHECK_FALSE(fixtures::segment(0, 1).is_stable());
}

TEST_CASE("validation reports violations") {
  RibbonGraphData leaf = fixtures::segment(0, 1).data();
  CHECK(validate(leaf).violation == Violation::kUnstable);

  RibbonGraphData empty;
  empty.half_edges = 0;
  empty.vertices = {{{}, 2}};
  CHECK_FALSE(validate(empty).ok());

  RibbonGraphData bad_labels = fixtures::planar_theta().data();
  bad_labels.face_labels = {{0, 1}, {2, 1}, {1, 3}};
  CHECK(validate(bad_labels).violation == Violation::kFaceLabelMismatch);

  RibbonGraphData negative = fixtures::theta().data();
  negative.vertices[0].defect = -1;
  CHECK(validate(negative).violation == Violation::kNegativeDefect);

  RibbonGraphData repeated = fixtures::theta().data();
  repeated.vertices[1].cycles = {{1, 3, 3}};
  CHECK_FALSE(validate(repeated).ok());

  RibbonGraphData two_parts;
  two_parts.half_edges = 4;
  two_parts.vertices = {{{{0}}, 1}, {{{1}}, 1}, {{{2}}, 1}, {{{3}}, 1}};
  two_parts.face_labels = {{0, 1}, {2, 2}};
  CHECK(validate(two_parts).violation == Violation::kDisconnected);
  CHECK_THROWS_AS(StableRibbonGraph{two_parts}, InvalidGraph);
}

TEST_CASE("genus adds the defects to the embedding genus") {
  RibbonGraphData d = fixtures::theta().data();
  d.vertices[0].defect = 2;
  d.vertices[1].defect = 1;
  CHECK(genus(StableRibbonGraph(d)) == 4);
}

TEST_CASE("relabel keeps faces and genus") {
  const auto g = fixtures::theta();
  const auto h = relabel(g, {2, 0, 1}, {true, false, true});
  CHECK(h.num_faces() == 1);
  CHECK(genus(h) == 1);
  CHECK(perimeters(h, ints({3, 1, 2})) == ints({12}));
}
