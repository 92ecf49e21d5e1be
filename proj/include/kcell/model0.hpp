#pragma once

// Genus-zero model: the maps F_i sending n distinct points of the projective
// line to points of CP^{n-3}.

#include <string>
#include <string_view>
#include <vector>

#include "kcell/rational.hpp"

namespace kcell {

struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Complex conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// Throws Error on division by zero.
  friend Complex operator/(const Complex& a, const Complex& b);
  bool operator==(const Complex& rhs) const { return re == rhs.re && im == rhs.im; }
};

/// "a+bi" with rational parts, e.g. "1/2-3i", "-i", "7".
std::string to_string(const Complex& z);
Complex parse_complex(std::string_view text);

/// A point of CP^1: a complex number or infinity.
struct MarkedPoint {
  Complex value;
  bool infinite = false;

  static MarkedPoint at(Complex z) { return {std::move(z), false}; }
  static MarkedPoint infinity() { return {{}, true}; }
  bool operator==(const MarkedPoint& rhs) const {
    return infinite == rhs.infinite && (infinite || value == rhs.value);
  }
};

using PointConfig = std::vector<MarkedPoint>;

std::string to_string(const MarkedPoint& x);
/// A complex number as above or "inf".
MarkedPoint parse_point(std::string_view text);
/// Comma separated points.
PointConfig parse_points(std::string_view text);

/// Throws Error unless there are at least 3 pairwise distinct points.
void validate_config(const PointConfig& config);

/// Homogeneous coordinates up to a non-zero scale; equality is projective.
struct ProjectivePoint {
  std::vector<Complex> coords;

  /// Scaled so that the first non-zero coordinate is 1.
  ProjectivePoint normalized() const;
  Complex coordinate_sum() const;
  bool operator==(const ProjectivePoint& rhs) const;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
struct Mobius {
  Complex a, b, c, d;

  MarkedPoint apply(const MarkedPoint& x) const;
};

/// F_i(config) = (f_i(x_j))_{j != i} with f_i(z) = 1/(z - x_i) + b and b
/// chosen so the coordinates sum to zero. `i` is 0-based. Configurations
/// containing infinity are first moved off it by a Mobius map.
ProjectivePoint f_map(const PointConfig& config, int i);
std::vector<ProjectivePoint> full_map(const PointConfig& config);

}  // namespace kcell
