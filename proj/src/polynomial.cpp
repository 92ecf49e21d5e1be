#include "kcell/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace kcell {

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw Error("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  Polynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& exponents, const Rational& c) {
  Polynomial p(int(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(num_vars_, 0));
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(num_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& c) {
  if (int(exponents.size()) != num_vars_) throw Error("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.num_vars_ != num_vars_) throw Error("adding polynomials in different spaces");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.num_vars_ != num_vars_) throw Error("subtracting polynomials in different spaces");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  return p *= Rational(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw Error("multiplying polynomials in different spaces");
  Polynomial out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(int index) const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (int(point.size()) != num_vars_) throw Error("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < num_vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial power(const Polynomial& p, int k) {
  Polynomial out = Polynomial::constant(p.num_vars(), 1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs, int m) const {
  if (int(subs.size()) != num_vars_) throw Error("compose: need one substitute per variable");
  for (const auto& s : subs) {
    if (s.num_vars() != m) throw Error("compose: substitute lives in the wrong space");
  }
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(m, c);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial::constant(m, 1));
      while (int(cache.size()) <= e[i]) cache.push_back(cache.back() * subs[i]);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::extended(int num_vars) const {
  if (num_vars < num_vars_) throw Error("cannot shrink a polynomial's variable space");
  Polynomial out(num_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne.resize(num_vars, 0);
    out.add_term(ne, c);
  }
  return out;
}

Rational Polynomial::integrate_standard_simplex() const {
  // int t^a over the standard k-simplex = prod(a_i!) / (k + |a|)!
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational num = 1;
    int total = num_vars_;
    for (int a : e) {
      num *= factorial(a);
      total += a;
    }
    sum += c * num / factorial(total);
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << kcell::to_string(c);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

AffineMap::AffineMap(Matrix linear_part, RationalVector offset_part)
    : linear(std::move(linear_part)), offset(std::move(offset_part)) {
  if (int(offset.size()) != linear.rows()) throw Error("affine map offset has wrong length");
}

AffineMap AffineMap::identity(int dim) { return AffineMap(Matrix::identity(dim), RationalVector(dim)); }

RationalVector AffineMap::apply(const RationalVector& x) const {
  RationalVector y = linear * x;
  for (size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
  return y;
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  return AffineMap(linear * inner.linear, apply(inner.offset));
}

std::vector<Polynomial> AffineMap::as_polynomials() const {
  std::vector<Polynomial> out;
  for (int i = 0; i < out_dim(); ++i) {
    Polynomial p = Polynomial::constant(in_dim(), offset[i]);
    for (int j = 0; j < in_dim(); ++j) {
      if (linear(i, j) != 0) p += Polynomial::variable(in_dim(), j) * linear(i, j);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace kcell
