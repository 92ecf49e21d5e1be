#include <doctest.h>

#include "kcell/suite.hpp"
#include "oracles.hpp"

using namespace kcell;

namespace {

PointConfig moved(const Mobius& m, const PointConfig& x) {
  PointConfig y;
  for (const auto& p : x) y.push_back(m.apply(p));
  return y;
}

}  // namespace

TEST_CASE("complex numbers parse and print") {
  CHECK(parse_complex("1/2-3i") == Complex(Rational(1, 2), -3));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("7") == Complex(7));
  CHECK(parse_complex(" 2+i ") == Complex(2, 1));
  CHECK(parse_complex(to_string(Complex(Rational(-5, 3), Rational(2, 7)))) == Complex(Rational(-5, 3), Rational(2, 7)));
  CHECK(parse_point("inf").infinite);
  CHECK_THROWS_AS(parse_complex("1+2j"), Error);
  CHECK_THROWS_AS(Complex(1) / Complex(0), Error);
}

TEST_CASE("three points always map to the same projective point") {
  const auto a = full_map(parse_points("0,1,inf"));
  const auto b = full_map(parse_points("2+i,-3,1/2i"));
  REQUIRE(a.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(a[i].coords.size() == 2);
    CHECK(a[i] == b[i]);
  }
}

TEST_CASE("coordinates of every F_i sum to zero") {
  for (const auto& f : full_map(parse_points("0,1,3,inf,2+i"))) {
    CHECK(f.coords.size() == 4);
    CHECK(f.coordinate_sum().is_zero());
  }
}

TEST_CASE("repeated points are rejected") {
  CHECK_THROWS_AS(full_map(parse_points("0,1,0")), Error);
  CHECK_THROWS_AS(full_map(parse_points("inf,1,inf,2")), Error);
  CHECK_THROWS_AS(full_map(parse_points("0,1")), Error);
  CHECK_THROWS_AS(f_map(parse_points("0,1,2"), 3), Error);
}

TEST_CASE("invariance under z -> (2z + 1) / (z + 3)") {
  const Mobius m{Complex(2), Complex(1), Complex(1), Complex(3)};
  const PointConfig x = parse_points("0,1,-3,1+i,inf");
  const PointConfig y = moved(m, x);
  CHECK(y[2].infinite);
  CHECK(full_map(x) == full_map(y));
}

TEST_CASE("n = 4 separation agrees with the cross-ratio") {
  const PointConfig x = parse_points("0,1,inf,2");
  const PointConfig same = parse_points("0,1,inf,2");
  const PointConfig other = parse_points("0,1,inf,3");
  CHECK(full_map(x) == full_map(same));
  CHECK_FALSE(full_map(x) == full_map(other));

  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    PointConfig a, b;
    auto draw = [&](PointConfig& c) {
      c.clear();
      while (c.size() < 4) {
        const MarkedPoint p = MarkedPoint::at(Complex(random_rational(rng, 5, 2), random_rational(rng, 5, 2)));
        if (std::find(c.begin(), c.end(), p) == c.end()) c.push_back(p);
      }
    };
    draw(a);
    draw(b);
    // Force an equal cross-ratio half of the time: b = a moved by z -> 1/z + 1.
    if (t % 2 == 0) {
      const Mobius m{Complex(1), Complex(1), Complex(1), Complex(0)};
      b = moved(m, a);
    }
    const auto [na, da] = oracle::cross_ratio(a);
    const auto [nb, db] = oracle::cross_ratio(b);
    CHECK((na * db == nb * da) == (full_map(a) == full_map(b)));
  }
}

TEST_CASE("projective points") {
  ProjectivePoint p{{Complex(2), Complex(0, 2), Complex(-2)}};
  ProjectivePoint q{{Complex(0, 1), Complex(-1), Complex(0, -1)}};
  CHECK(p == q);
  CHECK(p.normalized().coords == std::vector<Complex>{Complex(1), Complex(0, 1), Complex(-1)});
  const ProjectivePoint zero{{Complex(0), Complex(0)}};
  CHECK_THROWS_AS(zero.normalized(), Error);
}
