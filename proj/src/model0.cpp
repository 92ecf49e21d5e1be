#include "kcell/model0.hpp"

#include <algorithm>
#include <cctype>

namespace kcell {

Complex operator/(const Complex& a, const Complex& b) {
  const Rational n = b.norm();
  if (n == 0) throw Error("division by zero");
  const Complex num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string to_string(const Complex& z) {
  if (z.im == 0) return to_string(z.re);
  std::string out;
  if (z.re != 0) out = to_string(z.re) + (z.im > 0 ? "+" : "");
  return out + to_string(z.im) + "i";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_imaginary(std::string_view coef) {
  if (coef.empty() || coef == "+") return 1;
  if (coef == "-") return -1;
  if (coef.front() == '+') coef.remove_prefix(1);
  return parse_rational(coef);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error("empty complex number");
  if (s.back() != 'i') return Complex(parse_rational(s));
  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Complex(0, parse_imaginary(body));
  return Complex(parse_rational(body.substr(0, split)), parse_imaginary(body.substr(split)));
}

std::string to_string(const MarkedPoint& x) { return x.infinite ? "inf" : to_string(x.value); }

MarkedPoint parse_point(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "infinity") return MarkedPoint::infinity();
  return MarkedPoint::at(parse_complex(s));
}

PointConfig parse_points(std::string_view text) {
  PointConfig out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_point(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void validate_config(const PointConfig& config) {
  if (config.size() < 3) throw Error("at least 3 marked points are needed");
  for (size_t a = 0; a < config.size(); ++a) {
    for (size_t b = a + 1; b < config.size(); ++b) {
      if (config[a] == config[b]) {
        throw Error("points " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
      }
    }
  }
}

ProjectivePoint ProjectivePoint::normalized() const {
  auto it = std::find_if(coords.begin(), coords.end(), [](const Complex& z) { return !z.is_zero(); });
  if (it == coords.end()) throw Error("projective point with all coordinates zero");
  const Complex lead = *it;
  ProjectivePoint out;
  for (const auto& z : coords) out.coords.push_back(z / lead);
  return out;
}

Complex ProjectivePoint::coordinate_sum() const {
  Complex s;
  for (const auto& z : coords) s = s + z;
  return s;
}

bool ProjectivePoint::operator==(const ProjectivePoint& rhs) const {
  if (coords.size() != rhs.coords.size()) return false;
  // u ~ v iff all 2x2 minors vanish (both are non-zero vectors).
  for (size_t j = 0; j < coords.size(); ++j) {
    for (size_t k = j + 1; k < coords.size(); ++k) {
      if (!(coords[j] * rhs.coords[k] == coords[k] * rhs.coords[j])) return false;
    }
  }
  return true;
}

MarkedPoint Mobius::apply(const MarkedPoint& x) const {
  if (x.infinite) return c.is_zero() ? MarkedPoint::infinity() : MarkedPoint::at(a / c);
  const Complex den = c * x.value + d;
  if (den.is_zero()) return MarkedPoint::infinity();
  return MarkedPoint::at((a * x.value + b) / den);
}

namespace {

// Moves every point off infinity with z -> 1/(z - c), c a small integer not
// among the points.
std::vector<Complex> finite_coordinates(const PointConfig& config) {
  const bool has_inf = std::any_of(config.begin(), config.end(), [](const MarkedPoint& x) { return x.infinite; });
  std::vector<Complex> out;
  if (!has_inf) {
    for (const auto& x : config) out.push_back(x.value);
    return out;
  }
  for (long c = 0;; ++c) {
    const MarkedPoint shift = MarkedPoint::at(Complex(c));
    if (std::find(config.begin(), config.end(), shift) != config.end()) continue;
    const Mobius m{Complex(0), Complex(1), Complex(1), Complex(-c)};
    for (const auto& x : config) out.push_back(m.apply(x).value);
    return out;
  }
}

}  // namespace

ProjectivePoint f_map(const PointConfig& config, int i) {
  validate_config(config);
  const int n = int(config.size());
  if (i < 0 || i >= n) throw Error("point index out of range");
  const std::vector<Complex> x = finite_coordinates(config);
  Complex s;
  for (int j = 0; j < n; ++j)
    if (j != i) s = s + Complex(1) / (x[j] - x[i]);
  const Complex b = -(s / Complex(n - 1));
  ProjectivePoint out;
  for (int j = 0; j < n; ++j)
    if (j != i) out.coords.push_back(Complex(1) / (x[j] - x[i]) + b);
  return out;
}

std::vector<ProjectivePoint> full_map(const PointConfig& config) {
  validate_config(config);
  std::vector<ProjectivePoint> out;
  for (int i = 0; i < int(config.size()); ++i) out.push_back(f_map(config, i));
  return out;
}

}  // namespace kcell
