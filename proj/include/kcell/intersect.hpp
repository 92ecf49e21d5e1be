#pragma once

// The 2-forms omega_i on cells of A_p and exact integration of their
// products over top cells.

#include <string>
#include <vector>

#include "kcell/cells.hpp"

namespace kcell {

/// omega_i = (1/p_i^2) sum_{a<b<=k-1} dl_{s_a} ^ dl_{s_b} over the sides of
/// face i read along its face word from a starting side.
struct OmegaForm {
  int face = 0;
  Rational perimeter;
  /// Antisymmetric E x E matrix: omega = sum_{e<f} coefficients(e, f) dl_e ^ dl_f.
  Matrix coefficients;

  /// As a 2-form on edge-length space R^E.
  LocalForm local() const;
};

OmegaForm omega(const StableRibbonGraph& g, int face, const Rational& perimeter, int start = 0);

/// Pullback of a constant form on edge-length space to the cell chart.
LocalForm restrict_to_chart(const LocalForm& form, const CellChart& chart);

/// Coefficient c of the top-degree form dx_1 ^ ... ^ dx_f after restricting
/// to the chart. Throws Error when the degree differs from the dimension.
Rational restrict_to_cell(const LocalForm& form, const CellPolytope& cell);

/// Product omega_1^{d_1} ... omega_n^{d_n} on edge-length space.
LocalForm omega_product(const StableRibbonGraph& g, const std::vector<int>& d, const RationalVector& perimeters);

/// Sign of the coefficient of (sum_i p_i^2 omega_i)^D / D! in the cell's
/// chart; +1 when D = 0. Throws Error when that coefficient vanishes.
int orientation_sign(const CellPolytope& cell);

struct CellContribution {
  std::string key;  // hex canonical key
  long automorphisms = 1;
  bool empty = false;
  int sign = 1;
  Rational coefficient;
  Rational volume;
  Rational contribution;  // sign * coefficient * volume / automorphisms
  std::vector<int> free_edges;
};

CellContribution integrate_cell(const GraphClass& cls, const std::vector<int>& d, const RationalVector& perimeters,
                                const std::vector<int>& column_order = {});

struct IntersectionQuery {
  int genus = 0;
  std::vector<int> d;
  RationalVector perimeters;  // empty: default_perimeters(n)
  int jobs = 1;
};

struct IntersectionResult {
  Rational value;
  RationalVector perimeters;
  std::vector<CellContribution> ledger;
};

/// Overall sign tying the cell orientation to the Chern class normalization.
inline constexpr int kGlobalSign = 1;

/// Throws Error on a dimension mismatch, bad perimeters or (g, n) beyond the
/// enumeration size guard.
IntersectionResult intersection_number(const IntersectionQuery& query);
/// Same, reusing an enumeration.
IntersectionResult intersection_number(const IntersectionQuery& query, const std::vector<GraphClass>& classes);

/// Draws positive rational perimeters with pairwise distinct sums of
/// subsets, which keeps them away from the walls between cells.
RationalVector random_generic_perimeters(int faces, unsigned long seed);

/// d(alpha) on the bundle B_i over one cell against the pullback of omega_i.
struct BasicnessReport {
  bool ok = true;
  Rational fiber_integral;
  std::string message;
};

BasicnessReport check_basic(const CellPolytope& cell, int face);

}  // namespace kcell
