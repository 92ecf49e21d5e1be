#pragma once

#include "kcell/io.hpp"

namespace fixtures {

inline kcell::RibbonGraphData data(const char* json) { return kcell::graph_from_json(kcell::parse_json(json)); }

// sigma0 = (0 2 4)(1 3 5): one face.
inline kcell::StableRibbonGraph theta() {
  return kcell::StableRibbonGraph(
      data(R"({"half_edges":6,"vertices":[{"cycles":[[0,2,4]],"defect":0},{"cycles":[[1,3,5]],"defect":0}],"face_labels":{"0":1}})"));
}

// sigma0 = (0 2 4)(1 5 3): three faces (0 3), (2 5), (1 4) labeled 1, 2, 3.
inline kcell::StableRibbonGraph planar_theta() {
  return kcell::StableRibbonGraph(data(
      R"({"half_edges":6,"vertices":[{"cycles":[[0,2,4]],"defect":0},{"cycles":[[1,5,3]],"defect":0}],"face_labels":{"0":1,"2":2,"1":3}})"));
}

// One edge between two vertices of the given defects.
inline kcell::StableRibbonGraph segment(int d0 = 1, int d1 = 1) {
  kcell::RibbonGraphData g;
  g.half_edges = 2;
  g.vertices = {{{{0}}, d0}, {{{1}}, d1}};
  g.face_labels = {{0, 1}};
  return kcell::StableRibbonGraph(g);
}

// One vertex, sigma0 = (0 1 2 3): two loops, faces (0), (1 3), (2).
inline kcell::StableRibbonGraph figure_eight() {
  return kcell::StableRibbonGraph(
      data(R"({"half_edges":4,"vertices":[{"cycles":[[0,1,2,3]],"defect":0}],"face_labels":{"0":1,"1":2,"2":3}})"));
}

}  // namespace fixtures
