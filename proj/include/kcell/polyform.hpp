#pragma once

// Cellwise polynomial differential forms on polytopal complexes: exterior
// derivative, wedge product, pullback, integration over simplicial chains,
// Stokes, the cone (Poincare) homotopy and Chern numbers of polytopal circle
// bundles.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcell/geometry.hpp"
#include "kcell/polynomial.hpp"

namespace kcell {

/// A k-form on R^dim with polynomial coefficients, sum over increasing index
/// sets I of f_I dx_I. Index sets are bitmasks, so dim <= 32.
class LocalForm {
 public:
  using Basis = std::uint32_t;

  LocalForm(int dim = 0, int degree = 0);

  static LocalForm function(const Polynomial& f);
  static LocalForm differential(int dim, int index);
  static LocalForm term(int dim, Basis basis, const Polynomial& coefficient);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Basis, Polynomial>& terms() const { return terms_; }
  Polynomial coefficient(Basis basis) const;

  void add_term(Basis basis, const Polynomial& coefficient);

  LocalForm& operator+=(const LocalForm& rhs);
  LocalForm& operator-=(const LocalForm& rhs);
  LocalForm& operator*=(const Rational& c);
  friend LocalForm operator+(LocalForm a, const LocalForm& b) { return a += b; }
  friend LocalForm operator-(LocalForm a, const LocalForm& b) { return a -= b; }
  friend LocalForm operator*(LocalForm a, const Rational& c) { return a *= c; }
  friend LocalForm operator*(const Rational& c, LocalForm a) { return a *= c; }
  /// Multiplication by a function.
  friend LocalForm operator*(const Polynomial& f, const LocalForm& a);
  bool operator==(const LocalForm&) const = default;

  /// The same form viewed on R^dim x R^extra (extra trailing coordinates).
  LocalForm extended(int dim) const;

  std::string to_string() const;

 private:
  int dim_;
  int degree_;
  std::map<Basis, Polynomial> terms_;
};

LocalForm d(const LocalForm& form);
LocalForm wedge(const LocalForm& a, const LocalForm& b);
/// Pullback along map: R^in -> R^form.dim().
LocalForm pullback(const LocalForm& form, const AffineMap& map);

/// Cone homotopy at `apex` for a k-form (k >= 1) on a convex polytope:
/// (h w)(x) = sum_j (-1)^(j-1) [int_0^1 t^(k-1) f_I(apex + t(x - apex)) dt]
///            (x - apex)_{i_j} dx_{I \ i_j},
/// so that d h w + h d w = w. Throws Error when the apex lies outside P.
LocalForm cone_homotopy(const Polytope& polytope, const RationalVector& apex, const LocalForm& form);

/// Identifies `face` (a polytope of the complex) with a face of `parent`.
struct Gluing {
  int face = 0;
  int parent = 0;
  AffineMap map;
};

struct ComplexReport {
  bool ok = true;
  std::string message;
};

class PolytopalComplex {
 public:
  int add_polytope(Polytope p);
  int add_gluing(int face, int parent, AffineMap map);
  /// Adds every composite of gluings not yet present.
  void close_gluings();

  int size() const { return int(polytopes_.size()); }
  const Polytope& polytope(int i) const { return polytopes_[i]; }
  const std::vector<Polytope>& polytopes() const { return polytopes_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }

  /// Checks the gluing maps: affine of matching dimensions, each polytope
  /// identified with a face of its parent (bounded polytopes only), closure
  /// under composition, and no face claimed twice.
  ComplexReport validate() const;

 private:
  std::vector<Polytope> polytopes_;
  std::vector<Gluing> gluings_;
};

/// A differential form on a complex: one LocalForm per polytope.
struct ExteriorForm {
  int degree = 0;
  std::vector<LocalForm> pieces;

  ExteriorForm() = default;
  ExteriorForm(int degree_value, std::vector<LocalForm> local);
  /// Zero form of the given degree on every polytope.
  static ExteriorForm zero(const PolytopalComplex& complex, int degree);
  bool operator==(const ExteriorForm&) const = default;
};

ExteriorForm d(const ExteriorForm& form);
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

struct FormReport {
  bool ok = true;
  int gluing = -1;
  int face = -1;
  int parent = -1;
  std::string message;
};

/// Checks that pulling back along every gluing reproduces the face's form.
FormReport validate_form(const PolytopalComplex& complex, const ExteriorForm& form);

/// An affine k-simplex inside one polytope, oriented by vertex order.
struct Piece {
  int polytope = 0;
  std::vector<RationalVector> vertices;

  int degree() const { return int(vertices.size()) - 1; }
  bool operator==(const Piece&) const = default;
  auto operator<=>(const Piece&) const = default;
};

class Chain {
 public:
  Chain() = default;

  void add(const Rational& coefficient, Piece piece);
  void add(const Rational& coefficient, const Chain& other);

  /// Positively oriented triangulation of a compact full-dimensional polytope
  /// of the complex.
  static Chain polytope(const PolytopalComplex& complex, int index, const Rational& coefficient = 1);
  /// A piece given as an affine map from a compact polytope in R^k into the
  /// ambient space of polytope `index`.
  static Chain mapped(int index, const Polytope& domain, const AffineMap& map, const Rational& coefficient = 1);

  const std::vector<std::pair<Rational, Piece>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Degree of the pieces (-1 for the empty chain).
  int degree() const;

  Chain boundary() const;
  /// Merges equal simplices up to orientation and drops zero terms.
  Chain simplified() const;

 private:
  std::vector<std::pair<Rational, Piece>> terms_;
};

/// Pushes every piece down into the smallest polytope containing it through
/// the gluing maps, then simplifies; a chain is a cycle of the complex when
/// the reduced boundary is empty.
Chain reduce_through_gluings(const PolytopalComplex& complex, const Chain& chain);
bool is_cycle(const PolytopalComplex& complex, const Chain& chain);

Rational integrate(const Piece& piece, const LocalForm& form);
/// Throws Error on degree mismatch or a piece leaving its polytope.
Rational integrate(const PolytopalComplex& complex, const Chain& chain, const ExteriorForm& form);

struct StokesResult {
  Rational lhs;  // integral of d(alpha) over C
  Rational rhs;  // integral of alpha over the boundary of C
  bool equal = false;
};

StokesResult stokes_check(const PolytopalComplex& complex, const Chain& chain, const ExteriorForm& alpha);

/// A polytopal circle bundle. Every polytope of `total` is a slab
/// {(y, t) : y in P, lower(y) <= t <= upper(y)} over a polytope P of `base`;
/// the projection drops the last coordinate t.
struct FiberSlab {
  int total_polytope = 0;
  int base_polytope = 0;
  Polynomial lower;
  Polynomial upper;
};

struct CircleBundle {
  PolytopalComplex base;
  PolytopalComplex total;
  std::vector<FiberSlab> slabs;
};

struct BundleCurvature {
  Rational fiber_integral;
  ExteriorForm curvature;  // the 2-form w on the base with d(alpha) = pullback of w
};

/// Checks that the fiber integral of alpha is one non-zero constant and that
/// d(alpha) is basic, and returns the curvature on the base (faces without
/// slabs get the restriction from a parent). Throws Error otherwise.
BundleCurvature bundle_curvature(const CircleBundle& bundle, const ExteriorForm& alpha);

struct ChernResult {
  Rational fiber_integral;
  ExteriorForm curvature;  // the 2-form w on the base with d(alpha) = pullback of w
  Rational integral;       // integral of w over the cycle
  long chern = 0;          // integral / fiber_integral
};

/// Integrates the curvature over a 2-cycle of the base and divides by the
/// fiber integral. Throws Error when a precondition of bundle_curvature fails,
/// the chain is not a cycle or the result is not an integer.
ChernResult circle_bundle_chern(const CircleBundle& bundle, const ExteriorForm& alpha, const Chain& cycle);

}  // namespace kcell
