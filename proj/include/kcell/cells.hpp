#pragma once

// Cells of the complex A over fixed perimeters, the polygon fibers of the
// bundles B_i and the 1-form alpha on them.

#include <vector>

#include "kcell/enumerate.hpp"
#include "kcell/polyform.hpp"

namespace kcell {

/// Affine coordinates on {l : M l = p}: the free edges are the chart
/// coordinates, every edge length is an affine function of them.
struct CellChart {
  std::vector<int> free_edges;
  std::vector<int> dependent_edges;
  AffineMap lengths;  // R^free -> R^E

  int dimension() const { return int(free_edges.size()); }
};

/// The fiber {l > 0 : M l = p} of the cell of a graph over fixed perimeters.
struct CellPolytope {
  StableRibbonGraph graph;
  RationalVector perimeters;
  std::vector<std::vector<int>> incidence;  // faces x edges, multiplicities 0/1/2
  int rank = 0;
  bool consistent = true;  // M l = p has a solution at all
  bool empty = true;
  CellChart chart;
  Polytope polytope;  // in chart coordinates, strict inequalities

  int dimension() const { return chart.dimension(); }
  bool rank_deficient() const { return rank < int(perimeters.size()); }
  /// Chart point -> edge lengths.
  RationalVector lengths_at(const RationalVector& x) const { return chart.lengths.apply(x); }
};

/// Perimeters must be positive, one per face. `column_order` lists edges in
/// order of preference for elimination (dependent) variables; the default
/// order is 0..E-1.
CellPolytope cell_polytope(const StableRibbonGraph& g, const RationalVector& perimeters,
                           const std::vector<int>& column_order = {});

/// Default generic perimeters: distinct primes 3, 5, 7, ...
RationalVector default_perimeters(int faces);

/// The boundary polygon of one face. Sides are listed in the direction in
/// which distances from the distinguished point are measured, which is the
/// reverse of the face word.
struct PolygonFiber {
  int face = 0;
  std::vector<int> sides;  // edge of each side
  RationalVector lengths;  // side lengths
  Rational perimeter;

  int degree() const { return int(sides.size()); }
};

PolygonFiber polygon_fiber(const StableRibbonGraph& g, int face, const RationalVector& edge_lengths);

/// alpha = sum_m (l_m / p) d(phi_m / p) with the distinguished point on side
/// j (0-based), as a form in coordinates (L_1, ..., L_k, t) where t is the
/// distance from the start of side j; p is held fixed.
LocalForm alpha_on_arc(int k, int j, const Rational& perimeter);

/// One fiber as a 1-dimensional complex: k arcs [0, L_j] glued end to start
/// at k vertex points.
struct FiberComplex {
  PolytopalComplex complex;
  ExteriorForm alpha;
  Chain fundamental;  // the arcs, oriented by increasing t
};

FiberComplex alpha_form(const PolygonFiber& fiber);
Rational fiber_integral_alpha(const PolygonFiber& fiber);

/// The bundle B_i restricted to one cell: slabs {(x, t) : x in cell,
/// 0 <= t <= L_j(x)} over the cell chart, glued through copies of the cell
/// standing for the polygon vertices.
struct CellBundle {
  CircleBundle bundle;
  ExteriorForm alpha;
};

CellBundle alpha_form(const CellPolytope& cell, int face);

struct BoundaryCell {
  int edge = 0;
  StableRibbonGraph graph;  // canonical representative of the contraction
};

/// Every admissible single-edge contraction.
std::vector<BoundaryCell> boundary_cells(const StableRibbonGraph& g);

}  // namespace kcell
