#include "kcell/cells.hpp"

#include <algorithm>
#include <numeric>

#include "kcell/stable.hpp"

namespace kcell {

CellPolytope cell_polytope(const StableRibbonGraph& g, const RationalVector& perimeters,
                           const std::vector<int>& column_order) {
  const int n = g.num_faces();
  const int E = g.num_edges();
  if (int(perimeters.size()) != n) {
    throw Error("expected " + std::to_string(n) + " perimeters, got " + std::to_string(perimeters.size()));
  }
  for (const auto& p : perimeters) {
    if (p <= 0) throw Error("perimeters must be positive");
  }
  std::vector<int> order = column_order;
  if (order.empty()) {
    order.resize(E);
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    std::vector<int> expect(E);
    std::iota(expect.begin(), expect.end(), 0);
    if (check != expect) throw Error("column order must be a permutation of the edges");
  }

  CellPolytope cell{g, perimeters, face_edge_incidence(g), 0, true, true, {}, {}};
  Matrix a(n, E + 1);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < E; ++c) a(i, c) = cell.incidence[i][order[c]];
    a(i, E) = perimeters[i];
  }
  const auto pivots = row_reduce(a, E);
  cell.rank = int(pivots.size());
  for (int r = cell.rank; r < n; ++r) {
    if (a(r, E) != 0) cell.consistent = false;
  }

  std::vector<bool> is_pivot(E, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < E; ++c) {
    if (!is_pivot[c]) cell.chart.free_edges.push_back(order[c]);
  }
  for (int c : pivots) cell.chart.dependent_edges.push_back(order[c]);
  const int f = int(cell.chart.free_edges.size());

  Matrix lin(E, f);
  RationalVector off(E);
  std::vector<int> free_col;  // column in `a` of each chart coordinate
  for (int c = 0; c < E; ++c)
    if (!is_pivot[c]) free_col.push_back(c);
  for (int j = 0; j < f; ++j) lin(cell.chart.free_edges[j], j) = 1;
  for (size_t r = 0; r < pivots.size(); ++r) {
    const int e = order[pivots[r]];
    off[e] = a(int(r), E);
    for (int j = 0; j < f; ++j) lin(e, j) = -a(int(r), free_col[j]);
  }
  cell.chart.lengths = AffineMap(lin, off);

  std::vector<Halfspace> hs;
  for (int e = 0; e < E; ++e) hs.push_back(Halfspace{lin.row(e), -off[e], true});
  cell.polytope = Polytope(f, std::move(hs));

  if (!cell.consistent) {
    cell.empty = true;
  } else if (f == 0) {
    cell.empty = !std::all_of(off.begin(), off.end(), [](const Rational& v) { return v > 0; });
  } else {
    cell.empty = !cell.polytope.has_interior();
  }
  return cell;
}

RationalVector default_perimeters(int faces) {
  RationalVector out;
  for (int c = 3; int(out.size()) < faces; c += 2) {
    bool prime = true;
    for (int q = 3; q * q <= c; q += 2)
      if (c % q == 0) prime = false;
    if (prime) out.emplace_back(c);
  }
  return out;
}

PolygonFiber polygon_fiber(const StableRibbonGraph& g, int face, const RationalVector& edge_lengths) {
  if (face < 1 || face > g.num_faces()) throw Error("no face labeled " + std::to_string(face));
  if (int(edge_lengths.size()) != g.num_edges()) throw Error("one length per edge expected");
  PolygonFiber fiber;
  fiber.face = face;
  const FaceWord& w = g.face(face);
  fiber.sides.assign(w.edges.rbegin(), w.edges.rend());
  fiber.perimeter = 0;
  for (int e : fiber.sides) {
    if (edge_lengths[e] <= 0) throw Error("edge lengths must be positive");
    fiber.lengths.push_back(edge_lengths[e]);
    fiber.perimeter += edge_lengths[e];
  }
  return fiber;
}

LocalForm alpha_on_arc(int k, int j, const Rational& perimeter) {
  if (k < 1 || j < 0 || j >= k) throw Error("arc index out of range");
  const int dim = k + 1;
  const int t = k;
  // Vertex v_{j+m} sits at distance phi_m = (L_j - t) + L_{j+1} + ... + L_{j+m-1}
  // and is followed by side j+m.
  LocalForm alpha(dim, 1);
  LocalForm dphi = LocalForm::differential(dim, j) - LocalForm::differential(dim, t);
  const Rational scale = 1 / (perimeter * perimeter);
  for (int m = 1; m <= k; ++m) {
    const int next = (j + m) % k;
    alpha += Polynomial::variable(dim, next) * dphi * scale;
    dphi += LocalForm::differential(dim, next);
  }
  return alpha;
}

FiberComplex alpha_form(const PolygonFiber& fiber) {
  const int k = fiber.degree();
  if (k == 0) throw Error("a face has at least one side");
  FiberComplex out;
  std::vector<int> arcs, points;
  for (int j = 0; j < k; ++j) arcs.push_back(out.complex.add_polytope(Polytope::box({0}, {fiber.lengths[j]})));
  for (int j = 0; j < k; ++j) points.push_back(out.complex.add_polytope(Polytope(0, {})));
  // Point j is the end of arc j and the start of arc j+1.
  for (int j = 0; j < k; ++j) {
    Matrix none(1, 0);
    out.complex.add_gluing(points[j], arcs[j], AffineMap(none, {fiber.lengths[j]}));
    out.complex.add_gluing(points[j], arcs[(j + 1) % k], AffineMap(none, {0}));
  }

  // Restrict alpha from (L, t) space to the fiber t -> (L, t).
  std::vector<LocalForm> pieces;
  for (int j = 0; j < k; ++j) {
    Matrix lin(k + 1, 1);
    lin(k, 0) = 1;
    RationalVector off = fiber.lengths;
    off.push_back(0);
    pieces.push_back(pullback(alpha_on_arc(k, j, fiber.perimeter), AffineMap(lin, off)));
  }
  for (int j = 0; j < k; ++j) pieces.emplace_back(0, 1);
  out.alpha = ExteriorForm(1, std::move(pieces));
  for (int j = 0; j < k; ++j) out.fundamental.add(1, Chain::polytope(out.complex, arcs[j]));
  return out;
}

Rational fiber_integral_alpha(const PolygonFiber& fiber) {
  const FiberComplex fc = alpha_form(fiber);
  return integrate(fc.complex, fc.fundamental, fc.alpha);
}

CellBundle alpha_form(const CellPolytope& cell, int face) {
  if (cell.empty) throw Error("alpha needs a non-empty cell");
  const StableRibbonGraph& g = cell.graph;
  if (face < 1 || face > g.num_faces()) throw Error("no face labeled " + std::to_string(face));
  const int f = cell.dimension();
  const FaceWord& w = g.face(face);
  const std::vector<int> sides(w.edges.rbegin(), w.edges.rend());
  const int k = int(sides.size());
  const Rational& p = cell.perimeters[face - 1];

  CellBundle out;
  CircleBundle& b = out.bundle;
  const int base = b.base.add_polytope(cell.polytope);

  // Side lengths as affine functions of the chart.
  std::vector<Polynomial> side_length;
  const auto lengths = cell.chart.lengths.as_polynomials();
  for (int e : sides) side_length.push_back(lengths[e]);

  std::vector<int> slabs, vertices;
  for (int j = 0; j < k; ++j) {
    std::vector<Halfspace> hs;
    for (const auto& h : cell.polytope.constraints()) {
      RationalVector nrm = h.normal;
      nrm.push_back(0);
      hs.push_back(Halfspace{nrm, h.offset, h.strict});
    }
    RationalVector tpos(f + 1);
    tpos[f] = 1;
    hs.push_back(Halfspace{tpos, 0, false});
    // L_j(x) - t >= 0
    RationalVector upper(f + 1);
    for (int c = 0; c < f; ++c) upper[c] = cell.chart.lengths.linear(sides[j], c);
    upper[f] = -1;
    hs.push_back(Halfspace{upper, -cell.chart.lengths.offset[sides[j]], false});
    slabs.push_back(b.total.add_polytope(Polytope(f + 1, std::move(hs))));
    b.slabs.push_back(FiberSlab{slabs.back(), base, Polynomial(f), side_length[j]});
  }
  for (int j = 0; j < k; ++j) vertices.push_back(b.total.add_polytope(cell.polytope));
  for (int j = 0; j < k; ++j) {
    // x -> (x, L_j(x)) on slab j and x -> (x, 0) on slab j+1.
    Matrix lin(f + 1, f);
    for (int c = 0; c < f; ++c) lin(c, c) = 1;
    RationalVector off(f + 1);
    Matrix top = lin;
    for (int c = 0; c < f; ++c) top(f, c) = cell.chart.lengths.linear(sides[j], c);
    RationalVector top_off(f + 1);
    top_off[f] = cell.chart.lengths.offset[sides[j]];
    b.total.add_gluing(vertices[j], slabs[j], AffineMap(top, top_off));
    b.total.add_gluing(vertices[j], slabs[(j + 1) % k], AffineMap(lin, off));
  }

  // Pull alpha back along (x, t) -> (L(x), t).
  Matrix lin(k + 1, f + 1);
  RationalVector off(k + 1);
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < f; ++c) lin(a, c) = cell.chart.lengths.linear(sides[a], c);
    off[a] = cell.chart.lengths.offset[sides[a]];
  }
  lin(k, f) = 1;
  const AffineMap to_arc(lin, off);
  std::vector<LocalForm> pieces;
  for (int j = 0; j < k; ++j) pieces.push_back(pullback(alpha_on_arc(k, j, p), to_arc));
  for (int j = 0; j < k; ++j) {
    const auto& gl = b.total.gluings()[2 * j];
    pieces.push_back(pullback(pieces[gl.parent], gl.map));
  }
  out.alpha = ExteriorForm(1, std::move(pieces));
  return out;
}

std::vector<BoundaryCell> boundary_cells(const StableRibbonGraph& g) {
  std::vector<BoundaryCell> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!is_contractible(g, {e})) continue;
    out.push_back(BoundaryCell{e, canonical_representative(contract_edge(g, e))});
  }
  return out;
}

}  // namespace kcell
