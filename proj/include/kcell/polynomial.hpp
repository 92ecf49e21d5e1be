#pragma once

// Multivariate polynomials with rational coefficients and affine maps between
// coordinate spaces.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "kcell/linalg.hpp"
#include "kcell/rational.hpp"

namespace kcell {

using Exponents = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(int num_vars, const Rational& c);
  static Polynomial variable(int num_vars, int index);
  static Polynomial monomial(const Exponents& exponents, const Rational& c);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  int total_degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& exponents, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& rhs) const = default;

  Polynomial derivative(int index) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes x_i -> subs[i]; the result lives in `target_vars` variables.
  Polynomial compose(const std::vector<Polynomial>& subs, int target_vars) const;
  /// Same polynomial viewed in a space with extra trailing variables.
  Polynomial extended(int num_vars) const;
  /// Integral over the standard simplex {t_i >= 0, sum t_i <= 1}.
  Rational integrate_standard_simplex() const;

  std::string to_string() const;

 private:
  int num_vars_;
  std::map<Exponents, Rational> terms_;
};

Polynomial power(const Polynomial& p, int k);

/// x -> linear * x + offset from R^in to R^out.
struct AffineMap {
  Matrix linear;
  RationalVector offset;

  AffineMap() = default;
  AffineMap(Matrix linear_part, RationalVector offset_part);
  static AffineMap identity(int dim);

  int in_dim() const { return linear.cols(); }
  int out_dim() const { return linear.rows(); }

  RationalVector apply(const RationalVector& x) const;
  /// this o inner
  AffineMap after(const AffineMap& inner) const;
  /// Output coordinates as polynomials in the input coordinates.
  std::vector<Polynomial> as_polynomials() const;

  bool operator==(const AffineMap&) const = default;
};

}  // namespace kcell
