#include <doctest.h>

#include "kcell/suite.hpp"

using namespace kcell;

namespace {

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Polynomial x_(int dim, int i) { return Polynomial::variable(dim, i); }
Polynomial one(int dim) { return Polynomial::constant(dim, 1); }
LocalForm dx(int dim, int i) { return LocalForm::differential(dim, i); }

// The square [0,1]^2 alone.
PolytopalComplex unit_square() {
  PolytopalComplex c;
  c.add_polytope(Polytope::box(ints({0, 0}), ints({1, 1})));
  return c;
}

}  // namespace

TEST_CASE("exterior algebra basics") {
  const LocalForm a = dx(3, 0), b = dx(3, 1);
  CHECK(wedge(a, b) == wedge(b, a) * Rational(-1));
  CHECK(wedge(a, a).is_zero());
  const LocalForm f = LocalForm::function(x_(3, 0) * x_(3, 1));
  CHECK(d(f) == x_(3, 1) * dx(3, 0) + x_(3, 0) * dx(3, 1));
  CHECK(d(d(f)).is_zero());
  // Degree past the ambient dimension is the zero form.
  CHECK(wedge(wedge(a, b), wedge(dx(3, 2), a)).is_zero());
  CHECK(d(wedge(wedge(a, b), x_(3, 2) * dx(3, 2))).is_zero());
}

TEST_CASE("pullback along an affine map") {
  // (s, t) -> (s + t, 2s): pull back dx ^ dy = det [[1, 1], [2, 0]] ds ^ dt.
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 2;
  const AffineMap f(m, ints({0, 0}));
  CHECK(pullback(wedge(dx(2, 0), dx(2, 1)), f) == wedge(dx(2, 0), dx(2, 1)) * Rational(-2));
  CHECK(pullback(LocalForm::function(x_(2, 1)), f) == LocalForm::function(x_(2, 0) * Rational(2)));
}

TEST_CASE("two-square example is a form and satisfies Stokes") {
  CorpusComplex c = two_squares();
  CHECK(c.complex.validate().ok);
  const ExteriorForm w = two_squares_form(c);
  CHECK(validate_form(c.complex, w).ok);

  ExteriorForm bad = w;
  bad.pieces[1] = dx(2, 0) + LocalForm::term(2, 2, Polynomial::constant(2, 2));
  const FormReport r = validate_form(c.complex, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.face == 2);
  CHECK(r.parent == 1);

  Chain both;
  both.add(1, Chain::polytope(c.complex, 0));
  both.add(1, Chain::polytope(c.complex, 1));
  const StokesResult s = stokes_check(c.complex, both, w);
  CHECK(s.equal);
  CHECK(s.lhs == 0);

  // x dy over the right square alone gives 1 on both sides.
  ExteriorForm xdy(1, {x_(2, 0) * dx(2, 1), x_(2, 0) * dx(2, 1), LocalForm(1, 1)});
  const StokesResult r2 = stokes_check(c.complex, Chain::polytope(c.complex, 0), xdy);
  CHECK(r2.lhs == 1);
  CHECK(r2.rhs == 1);
}

TEST_CASE("constant functions are always compatible") {
  CorpusComplex c = two_squares();
  std::vector<LocalForm> pieces;
  for (int i = 0; i < c.complex.size(); ++i) {
    const int dim = c.complex.polytope(i).dim();
    pieces.push_back(LocalForm::function(one(dim)));
  }
  CHECK(validate_form(c.complex, ExteriorForm(0, pieces)).ok);
}

TEST_CASE("integrals over simplices") {
  const PolytopalComplex sq = unit_square();
  Chain diag;
  diag.add(1, Piece{0, {ints({0, 0}), ints({1, 1})}});
  CHECK(integrate(sq, diag, ExteriorForm(1, {dx(2, 0) + dx(2, 1)})) == 2);
  CHECK(integrate(sq, Chain::polytope(sq, 0), ExteriorForm(2, {x_(2, 0) * wedge(dx(2, 0), dx(2, 1))})) == Rational(1, 2));
  Chain outside;
  outside.add(1, Piece{0, {ints({0, 0}), ints({2, 0})}});
  CHECK_THROWS_AS(integrate(sq, outside, ExteriorForm(1, {dx(2, 0)})), Error);
  CHECK_THROWS_AS(integrate(sq, diag, ExteriorForm(2, {wedge(dx(2, 0), dx(2, 1))})), Error);
}

TEST_CASE("Stokes on the unit square with x dy") {
  const PolytopalComplex sq = unit_square();
  const StokesResult r = stokes_check(sq, Chain::polytope(sq, 0), ExteriorForm(1, {x_(2, 0) * dx(2, 1)}));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.equal);
}

TEST_CASE("a closed chain has zero boundary integral") {
  const PolytopalComplex sq = unit_square();
  const Chain loop = Chain::polytope(sq, 0).boundary();
  CHECK(loop.boundary().simplified().empty());
  const ExteriorForm f(0, {LocalForm::function(x_(2, 0) * x_(2, 1) + x_(2, 0) * x_(2, 0))});
  const StokesResult r = stokes_check(sq, loop, f);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
}

TEST_CASE("cone homotopy examples") {
  const Polytope box = Polytope::box(ints({-1, -1}), ints({1, 1}));
  const RationalVector origin = ints({0, 0});
  CHECK(cone_homotopy(box, origin, dx(2, 1)) == LocalForm::function(x_(2, 1)));
  const LocalForm area = wedge(dx(2, 0), dx(2, 1));
  const LocalForm h = cone_homotopy(box, origin, area);
  CHECK(h == (x_(2, 0) * dx(2, 1) - x_(2, 1) * dx(2, 0)) * Rational(1, 2));
  CHECK(d(h) == area);

  // Closed w = d(x^2) on [-1, 1] with apex 1/2: h w = x^2 - 1/4.
  const Polytope seg = Polytope::box(ints({-1}), ints({1}));
  const LocalForm w = d(LocalForm::function(x_(1, 0) * x_(1, 0)));
  const LocalForm hw = cone_homotopy(seg, {Rational(1, 2)}, w);
  CHECK(hw == LocalForm::function(x_(1, 0) * x_(1, 0) - one(1) * Rational(1, 4)));
  CHECK(d(hw) == w);

  CHECK_THROWS_AS(cone_homotopy(box, ints({3, 0}), area), Error);
}

TEST_CASE("homotopy formula on random forms") {
  Rng rng(17);
  std::vector<SuiteFailure> failures;
  for (int t = 0; t < 60; ++t) check_homotopy_case(rng, failures);
  for (const auto& f : failures) FAIL_CHECK(f.message);
}

TEST_CASE("Stokes on the corpus") {
  Rng rng(23);
  std::vector<SuiteFailure> failures;
  const auto corpus = stokes_corpus();
  int nonzero = 0;
  for (const auto& c : corpus) {
    CHECK_MESSAGE(c.complex.validate().ok, c.name);
    for (int t = 0; t < 20; ++t) check_stokes_case(rng, c, failures);
    // Whole-complex chains see the jump across x_0 = 0.
    int top = 0;
    for (int i = 0; i < c.complex.size(); ++i) top = std::max(top, c.complex.polytope(i).dim());
    const ExteriorForm a = random_piecewise_form(rng, c, top - 1);
    Chain all;
    for (int i = 0; i < c.complex.size(); ++i)
      if (c.complex.polytope(i).dim() == top) all.add(1, Chain::polytope(c.complex, i));
    const StokesResult r = stokes_check(c.complex, all, a);
    CHECK_MESSAGE(r.equal, c.name);
    if (r.lhs != 0) ++nonzero;
  }
  CHECK(nonzero >= 3);
  for (const auto& f : failures) FAIL_CHECK(f.check << ": " << f.message << " " << f.input.dump());
}

TEST_CASE("boundary operator") {
  Chain tri;
  tri.add(1, Piece{0, {ints({0, 0}), ints({1, 0}), ints({0, 1})}});
  CHECK(tri.boundary().terms().size() == 3);
  CHECK(tri.boundary().boundary().simplified().empty());
  Chain twice;
  twice.add(1, tri);
  twice.add(-1, tri);
  CHECK(twice.simplified().empty());
}

TEST_CASE("complex validation catches bad gluings") {
  PolytopalComplex c;
  const int sq = c.add_polytope(Polytope::box(ints({0, 0}), ints({1, 1})));
  const int seg = c.add_polytope(Polytope::box(ints({0}), ints({1})));
  Matrix half(2, 1);
  half(1, 0) = Rational(1, 2);
  c.add_gluing(seg, sq, AffineMap(half, ints({0, 0})));
  CHECK_FALSE(c.validate().ok);
}

namespace {

// Torus [0,1]^2 with opposite edges glued, and the product circle bundle
// over it with fiber coordinate t in [0, 1], t = 0 glued to t = 1.
CircleBundle torus_bundle() {
  CircleBundle b;
  const int sq = b.base.add_polytope(Polytope::box(ints({0, 0}), ints({1, 1})));
  const int h = b.base.add_polytope(Polytope::box(ints({0}), ints({1})));
  const int v = b.base.add_polytope(Polytope::box(ints({0}), ints({1})));
  auto edge = [](long a, long bb, long c, long dd) {
    Matrix m(2, 1);
    m(0, 0) = a;
    m(1, 0) = c;
    return AffineMap(m, ints({bb, dd}));
  };
  b.base.add_gluing(h, sq, edge(1, 0, 0, 0));
  b.base.add_gluing(h, sq, edge(1, 0, 0, 1));
  b.base.add_gluing(v, sq, edge(0, 0, 1, 0));
  b.base.add_gluing(v, sq, edge(0, 1, 1, 0));

  const int cube = b.total.add_polytope(Polytope::box(ints({0, 0, 0}), ints({1, 1, 1})));
  const int cap = b.total.add_polytope(Polytope::box(ints({0, 0}), ints({1, 1})));
  Matrix m(3, 2);
  m(0, 0) = 1;
  m(1, 1) = 1;
  b.total.add_gluing(cap, cube, AffineMap(m, ints({0, 0, 0})));
  b.total.add_gluing(cap, cube, AffineMap(m, ints({0, 0, 1})));
  b.slabs.push_back(FiberSlab{cube, sq, Polynomial(2), one(2)});
  return b;
}

}  // namespace

TEST_CASE("trivial circle bundle over a torus has Chern number zero") {
  const CircleBundle b = torus_bundle();
  const Chain torus = Chain::polytope(b.base, 0);
  CHECK(is_cycle(b.base, torus));
  const ExteriorForm alpha(1, {dx(3, 2), LocalForm(2, 1)});
  const ChernResult r = circle_bundle_chern(b, alpha, torus);
  CHECK(r.fiber_integral == 1);
  CHECK(r.integral == 0);
  CHECK(r.chern == 0);

}

TEST_CASE("bundle preconditions") {
  const CircleBundle b = torus_bundle();
  const Chain torus = Chain::polytope(b.base, 0);
  const ExteriorForm varying(1, {(one(3) + x_(3, 0)) * dx(3, 2), LocalForm(2, 1)});
  CHECK_THROWS_AS(circle_bundle_chern(b, varying, torus), Error);
  const ExteriorForm horizontal(1, {dx(3, 0), dx(2, 0)});
  CHECK_THROWS_AS(circle_bundle_chern(b, horizontal, torus), Error);
  const ExteriorForm alpha(1, {dx(3, 2), LocalForm(2, 1)});
  Chain half;
  half.add(1, Piece{0, {ints({0, 0}), ints({1, 0}), ints({0, 1})}});
  CHECK_THROWS_AS(circle_bundle_chern(b, alpha, half), Error);
}
