#include "kcell/intersect.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace kcell {

LocalForm OmegaForm::local() const {
  const int E = coefficients.rows();
  LocalForm w(E, 2);
  for (int e = 0; e < E; ++e) {
    for (int f = e + 1; f < E; ++f) {
      if (coefficients(e, f) != 0) {
        w.add_term((LocalForm::Basis(1) << e) | (LocalForm::Basis(1) << f), Polynomial::constant(E, coefficients(e, f)));
      }
    }
  }
  return w;
}

OmegaForm omega(const StableRibbonGraph& g, int face, const Rational& perimeter, int start) {
  if (face < 1 || face > g.num_faces()) throw Error("no face labeled " + std::to_string(face));
  if (perimeter <= 0) throw Error("perimeters must be positive");
  const FaceWord& w = g.face(face);
  const int k = w.degree();
  const int E = g.num_edges();
  OmegaForm out{face, perimeter, Matrix(E, E)};
  const Rational scale = 1 / (perimeter * perimeter);
  auto side = [&](int a) { return w.edges[((start + a) % k + k) % k]; };
  for (int a = 0; a < k - 1; ++a) {
    for (int b = a + 1; b < k - 1; ++b) {
      const int e = side(a), f = side(b);
      if (e == f) continue;
      out.coefficients(e, f) += scale;
      out.coefficients(f, e) -= scale;
    }
  }
  return out;
}

LocalForm restrict_to_chart(const LocalForm& form, const CellChart& chart) {
  return pullback(form, chart.lengths);
}

Rational restrict_to_cell(const LocalForm& form, const CellPolytope& cell) {
  const int f = cell.dimension();
  if (form.degree() != f) {
    throw Error("form of degree " + std::to_string(form.degree()) + " on a cell of dimension " + std::to_string(f));
  }
  if (cell.rank_deficient()) throw Error("perimeter relations are dependent on this cell");
  const LocalForm r = restrict_to_chart(form, cell.chart);
  const LocalForm::Basis top = f == 0 ? 0 : (LocalForm::Basis(1) << f) - 1;
  const Polynomial c = r.coefficient(top);
  if (!c.is_constant()) throw Error("restricted form is not constant");
  return c.constant_term();
}

LocalForm omega_product(const StableRibbonGraph& g, const std::vector<int>& d, const RationalVector& perimeters) {
  const int n = g.num_faces();
  if (int(d.size()) != n || int(perimeters.size()) != n) throw Error("one exponent and one perimeter per face");
  const int E = g.num_edges();
  LocalForm acc = LocalForm::function(Polynomial::constant(E, 1));
  for (int i = 0; i < n; ++i) {
    if (d[i] < 0) throw Error("exponents must be non-negative");
    const LocalForm w = omega(g, i + 1, perimeters[i]).local();
    for (int r = 0; r < d[i]; ++r) acc = wedge(acc, w);
  }
  return acc;
}

namespace {

// Products are taken in the chart, where the forms live in 2D variables
// instead of E.
Rational top_coefficient(const LocalForm& chart_form) {
  const int f = chart_form.dim();
  const LocalForm::Basis top = f == 0 ? 0 : (LocalForm::Basis(1) << f) - 1;
  return chart_form.coefficient(top).constant_term();
}

}  // namespace

int orientation_sign(const CellPolytope& cell) {
  const int f = cell.dimension();
  if (f % 2 != 0) throw Error("top cells have even dimension");
  const int D = f / 2;
  if (D == 0) return 1;
  const StableRibbonGraph& g = cell.graph;
  LocalForm ref(f, 2);
  for (int i = 0; i < g.num_faces(); ++i) {
    const Rational& p = cell.perimeters[i];
    ref += restrict_to_chart(omega(g, i + 1, p).local(), cell.chart) * (p * p);
  }
  LocalForm power_form = LocalForm::function(Polynomial::constant(f, 1));
  for (int r = 0; r < D; ++r) power_form = wedge(power_form, ref);
  const Rational c = top_coefficient(power_form) / factorial(D);
  if (c == 0) throw Error("reference form degenerates on this cell");
  return sign(c);
}

CellContribution integrate_cell(const GraphClass& cls, const std::vector<int>& d, const RationalVector& perimeters,
                                const std::vector<int>& column_order) {
  const StableRibbonGraph& g = cls.representative;
  CellContribution out;
  out.key = cls.key.hex();
  out.automorphisms = cls.automorphism_order;
  const CellPolytope cell = cell_polytope(g, perimeters, column_order);
  out.free_edges = cell.chart.free_edges;
  int D = 0;
  for (int x : d) D += x;
  if (cell.empty) {
    out.empty = true;
    out.coefficient = 0;
    out.volume = 0;
    out.contribution = 0;
    return out;
  }
  if (cell.rank_deficient()) throw Error("top cell " + out.key + " has dependent perimeter relations");
  if (cell.dimension() != 2 * D) {
    throw Error("exponents sum to " + std::to_string(D) + " but the cell has dimension " +
                std::to_string(cell.dimension()));
  }
  LocalForm acc = LocalForm::function(Polynomial::constant(cell.dimension(), 1));
  for (int i = 0; i < g.num_faces(); ++i) {
    const LocalForm w = restrict_to_chart(omega(g, i + 1, perimeters[i]).local(), cell.chart);
    for (int r = 0; r < d[i]; ++r) acc = wedge(acc, w);
  }
  out.coefficient = top_coefficient(acc);
  out.sign = orientation_sign(cell);
  out.volume = cell.dimension() == 0 ? Rational(1) : cell.polytope.volume();
  out.contribution = out.sign * out.coefficient * out.volume / out.automorphisms;
  return out;
}

IntersectionResult intersection_number(const IntersectionQuery& query) {
  const int n = int(query.d.size());
  top_cell_edges(query.genus, n);
  int D = 0;
  for (int x : query.d) {
    if (x < 0) throw Error("exponents must be non-negative");
    D += x;
  }
  if (D != 3 * query.genus - 3 + n) {
    throw Error("exponents must sum to 3g - 3 + n = " + std::to_string(3 * query.genus - 3 + n));
  }
  return intersection_number(query, enumerate_trivalent(query.genus, n));
}

IntersectionResult intersection_number(const IntersectionQuery& query, const std::vector<GraphClass>& classes) {
  const int n = int(query.d.size());
  IntersectionResult result;
  result.perimeters = query.perimeters.empty() ? default_perimeters(n) : query.perimeters;
  if (int(result.perimeters.size()) != n) throw Error("one perimeter per face expected");
  for (const auto& p : result.perimeters) {
    if (p <= 0) throw Error("perimeters must be positive");
  }
  result.ledger.resize(classes.size());

  const int jobs = std::max(1, std::min<int>(query.jobs, int(classes.size())));
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(jobs);
  auto worker = [&](int id) {
    try {
      for (size_t i = next++; i < classes.size(); i = next++) {
        result.ledger[i] = integrate_cell(classes[i], query.d, result.perimeters);
      }
    } catch (const std::exception& e) {
      errors[id] = e.what();
      next = classes.size();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw Error(e);
  }
  result.value = 0;
  for (const auto& c : result.ledger) result.value += c.contribution;
  result.value *= kGlobalSign;
  return result;
}

RationalVector random_generic_perimeters(int faces, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 997), den(1, 13);
  for (;;) {
    RationalVector p;
    for (int i = 0; i < faces; ++i) p.push_back(make_rational(num(rng), den(rng)));
    // Reject any vanishing signed subset sum.
    bool generic = true;
    long combos = 1;
    for (int i = 0; i < faces; ++i) combos *= 3;
    for (long c = 1; c < combos && generic; ++c) {
      Rational s = 0;
      long code = c;
      for (int i = 0; i < faces; ++i, code /= 3) {
        if (code % 3 == 1) s += p[i];
        if (code % 3 == 2) s -= p[i];
      }
      if (s == 0) generic = false;
    }
    if (generic) return p;
  }
}

BasicnessReport check_basic(const CellPolytope& cell, int face) {
  BasicnessReport report;
  try {
    const CellBundle cb = alpha_form(cell, face);
    const ComplexReport cr = cb.bundle.total.validate();
    if (!cr.ok) throw Error("total space: " + cr.message);
    const BundleCurvature bc = bundle_curvature(cb.bundle, cb.alpha);
    report.fiber_integral = bc.fiber_integral;
    if (bc.fiber_integral != -1) throw Error("fiber integral " + to_string(bc.fiber_integral) + " differs from -1");
    const LocalForm expected =
        restrict_to_chart(omega(cell.graph, face, cell.perimeters[face - 1]).local(), cell.chart);
    const LocalForm& got = bc.curvature.pieces[0];
    if (!(got == expected)) {
      throw Error("d(alpha) descends to " + got.to_string() + " but omega restricts to " + expected.to_string());
    }
  } catch (const Error& e) {
    report.ok = false;
    report.message = e.what();
  }
  return report;
}

}  // namespace kcell
