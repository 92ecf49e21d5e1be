#pragma once

// Convex polytopes given by rational half-spaces: membership, vertex
// enumeration, triangulation and exact volume.

#include <vector>

#include "kcell/linalg.hpp"

namespace kcell {

/// normal . x >= offset, or > when strict.
struct Halfspace {
  RationalVector normal;
  Rational offset;
  bool strict = false;

  Rational slack(const RationalVector& x) const;
  bool operator==(const Halfspace&) const = default;
};

using Simplex = std::vector<RationalVector>;

class Polytope {
 public:
  Polytope() = default;
  Polytope(int dim, std::vector<Halfspace> constraints);

  /// Axis-aligned box [lo_i, hi_i].
  static Polytope box(const RationalVector& lo, const RationalVector& hi);
  /// Closed simplex with the given dim+1 vertices.
  static Polytope simplex(const std::vector<RationalVector>& vertices);

  int dim() const { return dim_; }
  const std::vector<Halfspace>& constraints() const { return constraints_; }

  bool contains(const RationalVector& x, bool closure = true) const;

  /// Vertices of the closure, assuming it is bounded. Deterministic order.
  std::vector<RationalVector> vertices() const;
  /// Non-empty interior, decided on the closure's vertices (bounded case).
  bool has_interior() const;
  /// Triangulation of the closure into dim-simplices (bounded, full-dimensional).
  std::vector<Simplex> triangulate() const;
  /// Exact Lebesgue volume of the closure; 1 for a 0-dimensional polytope.
  Rational volume() const;

  /// Some point of the interior (vertex barycenter); requires has_interior().
  RationalVector interior_point() const;

  bool operator==(const Polytope&) const = default;

 private:
  int dim_ = 0;
  std::vector<Halfspace> constraints_;
};

/// Signed volume of a simplex: det(v_i - v_0) / d!.
Rational signed_volume(const Simplex& s);

}  // namespace kcell
