#include "kcell/polyform.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace kcell {

namespace {

// Sign of dx_A ^ dx_B relative to dx_{A u B}: one flip per pair a > b.
int wedge_sign(LocalForm::Basis a, LocalForm::Basis b) {
  int swaps = 0;
  while (b) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<int> indices_of(LocalForm::Basis basis) {
  std::vector<int> out;
  while (basis) {
    out.push_back(std::countr_zero(basis));
    basis &= basis - 1;
  }
  return out;
}

}  // namespace

LocalForm::LocalForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > 32) throw Error("forms are limited to 32 ambient coordinates");
  if (degree < 0) throw Error("negative form degree");
}

LocalForm LocalForm::function(const Polynomial& f) {
  LocalForm w(f.num_vars(), 0);
  w.add_term(0, f);
  return w;
}

LocalForm LocalForm::differential(int dim, int index) {
  LocalForm w(dim, 1);
  w.add_term(Basis(1) << index, Polynomial::constant(dim, 1));
  return w;
}

LocalForm LocalForm::term(int dim, Basis basis, const Polynomial& coefficient) {
  LocalForm w(dim, std::popcount(basis));
  w.add_term(basis, coefficient);
  return w;
}

Polynomial LocalForm::coefficient(Basis basis) const {
  auto it = terms_.find(basis);
  return it == terms_.end() ? Polynomial(dim_) : it->second;
}

void LocalForm::add_term(Basis basis, const Polynomial& coefficient) {
  if (std::popcount(basis) != degree_) throw Error("basis element has the wrong degree");
  if (dim_ < 32 && (basis >> dim_) != 0) throw Error("basis element outside the ambient space");
  if (coefficient.num_vars() != dim_) throw Error("coefficient lives in the wrong space");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(basis, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LocalForm& LocalForm::operator+=(const LocalForm& rhs) {
  if (rhs.dim_ != dim_ || rhs.degree_ != degree_) throw Error("adding forms of different type");
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

LocalForm& LocalForm::operator-=(const LocalForm& rhs) {
  if (rhs.dim_ != dim_ || rhs.degree_ != degree_) throw Error("subtracting forms of different type");
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

LocalForm& LocalForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, p] : terms_) p *= c;
  return *this;
}

LocalForm operator*(const Polynomial& f, const LocalForm& a) {
  LocalForm out(a.dim(), a.degree());
  for (const auto& [b, c] : a.terms()) out.add_term(b, f * c);
  return out;
}

LocalForm LocalForm::extended(int dim) const {
  LocalForm out(dim, degree_);
  for (const auto& [b, c] : terms_) out.add_term(b, c.extended(dim));
  return out;
}

std::string LocalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int i : indices_of(b)) os << " dx" << i;
  }
  return os.str();
}

LocalForm d(const LocalForm& form) {
  LocalForm out(form.dim(), form.degree() + 1);
  if (form.degree() + 1 > form.dim()) return out;
  for (const auto& [b, c] : form.terms()) {
    for (int j = 0; j < form.dim(); ++j) {
      const LocalForm::Basis bit = LocalForm::Basis(1) << j;
      if (b & bit) continue;
      Polynomial dc = c.derivative(j);
      if (dc.is_zero()) continue;
      if (wedge_sign(bit, b) < 0) dc = -dc;
      out.add_term(b | bit, dc);
    }
  }
  return out;
}

LocalForm wedge(const LocalForm& a, const LocalForm& b) {
  if (a.dim() != b.dim()) throw Error("wedge of forms on different spaces");
  LocalForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (ba & bb) continue;
      Polynomial c = ca * cb;
      if (wedge_sign(ba, bb) < 0) c = -c;
      out.add_term(ba | bb, c);
    }
  }
  return out;
}

LocalForm pullback(const LocalForm& form, const AffineMap& map) {
  if (map.out_dim() != form.dim()) throw Error("pullback: map lands in the wrong space");
  const int m = map.in_dim();
  const auto subs = map.as_polynomials();
  // Pulled-back differentials dy_i = sum_c L[i][c] dx_c.
  std::vector<LocalForm> dy;
  for (int i = 0; i < form.dim(); ++i) {
    LocalForm w(m, 1);
    for (int c = 0; c < m; ++c) {
      if (map.linear(i, c) != 0) w.add_term(LocalForm::Basis(1) << c, Polynomial::constant(m, map.linear(i, c)));
    }
    dy.push_back(std::move(w));
  }
  LocalForm out(m, form.degree());
  for (const auto& [b, c] : form.terms()) {
    LocalForm acc = LocalForm::function(c.compose(subs, m));
    for (int i : indices_of(b)) {
      acc = wedge(acc, dy[i]);
      if (acc.is_zero()) break;
    }
    if (!acc.is_zero()) out += acc;
  }
  return out;
}

LocalForm cone_homotopy(const Polytope& polytope, const RationalVector& apex, const LocalForm& form) {
  if (form.degree() < 1) throw Error("cone homotopy needs a form of degree >= 1");
  if (polytope.dim() != form.dim()) throw Error("cone homotopy: polytope and form live in different spaces");
  if (!polytope.contains(apex)) throw Error("cone apex lies outside the polytope");
  const int m = form.dim();
  const int k = form.degree();
  // Substitution x_i -> apex_i + t (x_i - apex_i) in m+1 variables (t last).
  std::vector<Polynomial> subs;
  const Polynomial t = Polynomial::variable(m + 1, m);
  for (int i = 0; i < m; ++i) {
    Polynomial xi = Polynomial::variable(m + 1, i) - Polynomial::constant(m + 1, apex[i]);
    subs.push_back(Polynomial::constant(m + 1, apex[i]) + t * xi);
  }
  LocalForm out(m, k - 1);
  for (const auto& [b, c] : form.terms()) {
    const Polynomial scaled = c.compose(subs, m + 1) * power(t, k - 1);
    // int_0^1 dt: each t^j contributes 1/(j+1).
    Polynomial radial(m);
    for (const auto& [e, coef] : scaled.terms()) {
      Exponents ex(e.begin(), e.end() - 1);
      radial.add_term(ex, coef / (e.back() + 1));
    }
    const auto idx = indices_of(b);
    for (size_t j = 0; j < idx.size(); ++j) {
      const int i = idx[j];
      Polynomial coeff = radial * (Polynomial::variable(m, i) - Polynomial::constant(m, apex[i]));
      if (j % 2 == 1) coeff = -coeff;
      out.add_term(b & ~(LocalForm::Basis(1) << i), coeff);
    }
  }
  return out;
}

int PolytopalComplex::add_polytope(Polytope p) {
  polytopes_.push_back(std::move(p));
  return int(polytopes_.size()) - 1;
}

int PolytopalComplex::add_gluing(int face, int parent, AffineMap map) {
  if (face < 0 || face >= size() || parent < 0 || parent >= size()) throw Error("gluing refers to a missing polytope");
  if (map.in_dim() != polytopes_[face].dim() || map.out_dim() != polytopes_[parent].dim()) {
    throw Error("gluing map has the wrong dimensions");
  }
  gluings_.push_back(Gluing{face, parent, std::move(map)});
  return int(gluings_.size()) - 1;
}

void PolytopalComplex::close_gluings() {
  bool changed = true;
  while (changed) {
    changed = false;
    const size_t n = gluings_.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (gluings_[i].parent != gluings_[j].face) continue;
        AffineMap comp = gluings_[j].map.after(gluings_[i].map);
        const int face = gluings_[i].face, parent = gluings_[j].parent;
        const bool present = std::any_of(gluings_.begin(), gluings_.end(), [&](const Gluing& g) {
          return g.face == face && g.parent == parent && g.map == comp;
        });
        if (!present) {
          gluings_.push_back(Gluing{face, parent, std::move(comp)});
          changed = true;
        }
      }
    }
  }
}

ComplexReport PolytopalComplex::validate() const {
  auto fail = [](std::string msg) { return ComplexReport{false, std::move(msg)}; };
  std::set<std::pair<int, std::vector<RationalVector>>> claimed;
  for (size_t gi = 0; gi < gluings_.size(); ++gi) {
    const Gluing& g = gluings_[gi];
    const Polytope& face = polytopes_[g.face];
    const Polytope& parent = polytopes_[g.parent];
    if (g.map.in_dim() != face.dim() || g.map.out_dim() != parent.dim()) {
      return fail("gluing " + std::to_string(gi) + " has the wrong dimensions");
    }
    if (rank(g.map.linear) != face.dim()) return fail("gluing " + std::to_string(gi) + " is not injective");
    const auto verts = face.vertices();
    if (verts.empty()) continue;  // unbounded or empty: checked symbolically only
    std::vector<RationalVector> image;
    for (const auto& v : verts) {
      image.push_back(g.map.apply(v));
      if (!parent.contains(image.back())) {
        return fail("gluing " + std::to_string(gi) + " leaves its parent polytope");
      }
    }
    // The image must be a whole face: the parent's face cut out by the
    // constraints tight on the image has the image's dimension.
    std::vector<RationalVector> face_pts;
    for (const auto& v : parent.vertices()) {
      bool on_face = true;
      for (const auto& h : parent.constraints()) {
        bool tight_on_image = std::all_of(image.begin(), image.end(), [&](const auto& y) { return h.slack(y) == 0; });
        if (tight_on_image && h.slack(v) != 0) {
          on_face = false;
          break;
        }
      }
      if (on_face) face_pts.push_back(v);
    }
    std::sort(face_pts.begin(), face_pts.end());
    std::vector<RationalVector> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    if (face_pts != sorted_image) {
      return fail("gluing " + std::to_string(gi) + " does not identify polytope " + std::to_string(g.face) +
                  " with a face of polytope " + std::to_string(g.parent));
    }
    if (!claimed.emplace(g.parent, sorted_image).second) {
      // Several gluings may land on the same face only from the same polytope.
      for (size_t gj = 0; gj < gi; ++gj) {
        const Gluing& o = gluings_[gj];
        if (o.parent != g.parent || o.face == g.face) continue;
        std::vector<RationalVector> other;
        for (const auto& v : polytopes_[o.face].vertices()) other.push_back(o.map.apply(v));
        std::sort(other.begin(), other.end());
        if (other == sorted_image) {
          return fail("polytopes " + std::to_string(o.face) + " and " + std::to_string(g.face) +
                      " are glued to the same face of polytope " + std::to_string(g.parent));
        }
      }
    }
  }
  for (const auto& a : gluings_) {
    for (const auto& b : gluings_) {
      if (a.parent != b.face) continue;
      const AffineMap comp = b.map.after(a.map);
      const bool present = std::any_of(gluings_.begin(), gluings_.end(), [&](const Gluing& g) {
        return g.face == a.face && g.parent == b.parent && g.map == comp;
      });
      if (!present) {
        return fail("gluings do not compose: polytope " + std::to_string(a.face) + " -> " + std::to_string(a.parent) +
                    " -> " + std::to_string(b.parent));
      }
    }
  }
  return {};
}

ExteriorForm::ExteriorForm(int degree_value, std::vector<LocalForm> local)
    : degree(degree_value), pieces(std::move(local)) {
  for (const auto& p : pieces) {
    if (p.degree() != degree) throw Error("exterior form pieces must share one degree");
  }
}

ExteriorForm ExteriorForm::zero(const PolytopalComplex& complex, int degree) {
  std::vector<LocalForm> pieces;
  for (const auto& p : complex.polytopes()) pieces.emplace_back(p.dim(), degree);
  return ExteriorForm(degree, std::move(pieces));
}

ExteriorForm d(const ExteriorForm& form) {
  std::vector<LocalForm> pieces;
  for (const auto& p : form.pieces) pieces.push_back(d(p));
  return ExteriorForm(form.degree + 1, std::move(pieces));
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.pieces.size() != b.pieces.size()) throw Error("wedge of forms on different complexes");
  std::vector<LocalForm> pieces;
  for (size_t i = 0; i < a.pieces.size(); ++i) pieces.push_back(wedge(a.pieces[i], b.pieces[i]));
  return ExteriorForm(a.degree + b.degree, std::move(pieces));
}

FormReport validate_form(const PolytopalComplex& complex, const ExteriorForm& form) {
  if (int(form.pieces.size()) != complex.size()) {
    return FormReport{false, -1, -1, -1, "form has " + std::to_string(form.pieces.size()) + " pieces for " +
                                             std::to_string(complex.size()) + " polytopes"};
  }
  for (int i = 0; i < complex.size(); ++i) {
    if (form.pieces[i].dim() != complex.polytope(i).dim()) {
      return FormReport{false, -1, i, -1, "form piece " + std::to_string(i) + " lives in the wrong space"};
    }
  }
  const auto& gl = complex.gluings();
  for (size_t gi = 0; gi < gl.size(); ++gi) {
    const LocalForm restricted = pullback(form.pieces[gl[gi].parent], gl[gi].map);
    if (!(restricted == form.pieces[gl[gi].face])) {
      return FormReport{false, int(gi), gl[gi].face, gl[gi].parent,
                        "restriction " + restricted.to_string() + " differs from " +
                            form.pieces[gl[gi].face].to_string()};
    }
  }
  return {};
}

void Chain::add(const Rational& coefficient, Piece piece) {
  if (coefficient == 0) return;
  if (!terms_.empty() && piece.degree() != degree()) throw Error("chain pieces must share one degree");
  terms_.emplace_back(coefficient, std::move(piece));
}

void Chain::add(const Rational& coefficient, const Chain& other) {
  for (const auto& [c, p] : other.terms_) add(coefficient * c, p);
}

int Chain::degree() const { return terms_.empty() ? -1 : terms_.front().second.degree(); }

namespace {

Simplex oriented_positive(Simplex s) {
  if (s.size() >= 2 && signed_volume(s) < 0) std::swap(s[0], s[1]);
  return s;
}

}  // namespace

Chain Chain::polytope(const PolytopalComplex& complex, int index, const Rational& coefficient) {
  Chain c;
  for (auto& s : complex.polytope(index).triangulate()) c.add(coefficient, Piece{index, oriented_positive(s)});
  return c;
}

Chain Chain::mapped(int index, const Polytope& domain, const AffineMap& map, const Rational& coefficient) {
  if (map.in_dim() != domain.dim()) throw Error("piece map does not match its domain");
  Chain c;
  for (auto& s : domain.triangulate()) {
    Piece p{index, {}};
    for (const auto& v : oriented_positive(s)) p.vertices.push_back(map.apply(v));
    c.add(coefficient, std::move(p));
  }
  return c;
}

Chain Chain::boundary() const {
  Chain out;
  for (const auto& [c, p] : terms_) {
    if (p.degree() == 0) continue;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      Piece f{p.polytope, {}};
      for (size_t j = 0; j < p.vertices.size(); ++j)
        if (j != i) f.vertices.push_back(p.vertices[j]);
      out.add(i % 2 == 0 ? c : Rational(-c), std::move(f));
    }
  }
  return out;
}

Chain Chain::simplified() const {
  std::map<Piece, Rational> merged;
  for (const auto& [c, p] : terms_) {
    // Sort vertices, tracking the permutation parity.
    Piece q = p;
    int parity = 0;
    for (size_t i = 0; i < q.vertices.size(); ++i) {
      for (size_t j = 0; j + 1 < q.vertices.size() - i; ++j) {
        if (q.vertices[j + 1] < q.vertices[j]) {
          std::swap(q.vertices[j], q.vertices[j + 1]);
          parity ^= 1;
        }
      }
    }
    // Degenerate simplices (repeated vertices) integrate to zero.
    if (std::adjacent_find(q.vertices.begin(), q.vertices.end()) != q.vertices.end()) continue;
    merged[q] += parity ? Rational(-c) : c;
  }
  Chain out;
  for (auto& [p, c] : merged) {
    if (c != 0) out.add(c, p);
  }
  return out;
}

Chain reduce_through_gluings(const PolytopalComplex& complex, const Chain& chain) {
  Chain out;
  for (const auto& [c, piece] : chain.terms()) {
    Piece p = piece;
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& g : complex.gluings()) {
        if (g.parent != p.polytope) continue;
        if (complex.polytope(g.face).dim() >= complex.polytope(p.polytope).dim()) continue;
        std::vector<RationalVector> pre;
        for (const auto& v : p.vertices) {
          RationalVector rhs = v;
          for (size_t i = 0; i < rhs.size(); ++i) rhs[i] -= g.map.offset[i];
          auto x = solve_unique(g.map.linear, rhs);
          if (!x || !complex.polytope(g.face).contains(*x)) break;
          pre.push_back(std::move(*x));
        }
        if (pre.size() != p.vertices.size()) continue;
        p = Piece{g.face, std::move(pre)};
        moved = true;
        break;
      }
    }
    out.add(c, std::move(p));
  }
  return out.simplified();
}

bool is_cycle(const PolytopalComplex& complex, const Chain& chain) {
  return reduce_through_gluings(complex, chain.boundary()).empty();
}

Rational integrate(const Piece& piece, const LocalForm& form) {
  const int k = piece.degree();
  if (k != form.degree()) throw Error("integrating a " + std::to_string(form.degree()) + "-form over a " +
                                      std::to_string(k) + "-piece");
  const int m = form.dim();
  if (k == 0) return form.coefficient(0).evaluate(piece.vertices.front());
  Matrix lin(m, k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) lin(i, j) = piece.vertices[j + 1][i] - piece.vertices[0][i];
  const LocalForm pulled = pullback(form, AffineMap(lin, piece.vertices[0]));
  const LocalForm::Basis top = k == 32 ? ~LocalForm::Basis(0) : (LocalForm::Basis(1) << k) - 1;
  return pulled.coefficient(top).integrate_standard_simplex();
}

Rational integrate(const PolytopalComplex& complex, const Chain& chain, const ExteriorForm& form) {
  if (chain.empty()) return 0;
  if (chain.degree() != form.degree) throw Error("degree mismatch between chain and form");
  Rational total = 0;
  for (const auto& [c, p] : chain.terms()) {
    if (p.polytope < 0 || p.polytope >= complex.size()) throw Error("piece refers to a missing polytope");
    for (const auto& v : p.vertices) {
      if (!complex.polytope(p.polytope).contains(v)) throw Error("piece leaves its polytope");
    }
    total += c * integrate(p, form.pieces[p.polytope]);
  }
  return total;
}

StokesResult stokes_check(const PolytopalComplex& complex, const Chain& chain, const ExteriorForm& alpha) {
  StokesResult r;
  r.lhs = integrate(complex, chain, d(alpha));
  r.rhs = integrate(complex, chain.boundary(), alpha);
  r.equal = r.lhs == r.rhs;
  return r;
}

namespace {

// Antiderivative in the last variable, evaluated between two bounds that do
// not depend on it.
Polynomial integrate_last(const Polynomial& f, const Polynomial& lower, const Polynomial& upper) {
  const int m = f.num_vars() - 1;
  Polynomial anti(m + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents ex = e;
    ++ex.back();
    anti.add_term(ex, c / ex.back());
  }
  auto at = [&](const Polynomial& bound) {
    std::vector<Polynomial> subs;
    for (int i = 0; i < m; ++i) subs.push_back(Polynomial::variable(m, i));
    subs.push_back(bound);
    return anti.compose(subs, m);
  };
  return at(upper) - at(lower);
}

}  // namespace

BundleCurvature bundle_curvature(const CircleBundle& bundle, const ExteriorForm& alpha) {
  const auto& base = bundle.base;
  const auto& total = bundle.total;
  if (alpha.degree != 1 || int(alpha.pieces.size()) != total.size()) throw Error("alpha must be a 1-form on the total space");
  if (!validate_form(total, alpha).ok) throw Error("alpha is not a form on the total space");

  // Fiber integral over every base polytope carrying slabs.
  std::vector<std::optional<Polynomial>> fiber(base.size());
  for (const auto& s : bundle.slabs) {
    const int m = base.polytope(s.base_polytope).dim();
    if (total.polytope(s.total_polytope).dim() != m + 1) throw Error("slab dimension does not match its base");
    const LocalForm& a = alpha.pieces[s.total_polytope];
    const Polynomial contribution =
        integrate_last(a.coefficient(LocalForm::Basis(1) << m), s.lower, s.upper);
    auto& acc = fiber[s.base_polytope];
    acc = acc ? *acc + contribution : contribution;
  }
  std::optional<Rational> constant;
  for (int b = 0; b < base.size(); ++b) {
    if (!fiber[b]) continue;
    if (!fiber[b]->is_constant()) throw Error("fiber integral of alpha varies over base polytope " + std::to_string(b));
    const Rational value = fiber[b]->constant_term();
    if (constant && *constant != value) throw Error("fiber integral of alpha is not constant across the base");
    constant = value;
  }
  if (!constant || *constant == 0) throw Error("fiber integral of alpha must be a non-zero constant");

  // d(alpha) must be basic: no dt component, coefficients independent of t.
  std::vector<std::optional<LocalForm>> omega(base.size());
  for (const auto& s : bundle.slabs) {
    const int m = base.polytope(s.base_polytope).dim();
    const LocalForm da = d(alpha.pieces[s.total_polytope]);
    LocalForm w(m, 2);
    for (const auto& [b, c] : da.terms()) {
      if (b & (LocalForm::Basis(1) << m)) throw Error("d(alpha) has a fiber-direction component");
      Polynomial reduced(m);
      for (const auto& [e, coef] : c.terms()) {
        if (e.back() != 0) throw Error("d(alpha) depends on the fiber coordinate");
        reduced.add_term(Exponents(e.begin(), e.end() - 1), coef);
      }
      w.add_term(b, reduced);
    }
    auto& slot = omega[s.base_polytope];
    if (slot && !(*slot == w)) throw Error("d(alpha) differs between slabs over one base polytope");
    slot = std::move(w);
  }
  // Faces without slabs inherit the restriction from a parent.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& g : base.gluings()) {
      if (!omega[g.face] && omega[g.parent]) {
        omega[g.face] = pullback(*omega[g.parent], g.map);
        progress = true;
      }
    }
  }
  ExteriorForm curvature;
  curvature.degree = 2;
  for (int b = 0; b < base.size(); ++b) {
    curvature.pieces.push_back(omega[b] ? *omega[b] : LocalForm(base.polytope(b).dim(), 2));
  }
  const FormReport report = validate_form(base, curvature);
  if (!report.ok) throw Error("curvature is not a form on the base: " + report.message);

  return BundleCurvature{*constant, std::move(curvature)};
}

ChernResult circle_bundle_chern(const CircleBundle& bundle, const ExteriorForm& alpha, const Chain& cycle) {
  BundleCurvature bc = bundle_curvature(bundle, alpha);
  if (cycle.degree() != 2) throw Error("Chern numbers are integrated over 2-cycles");
  if (!is_cycle(bundle.base, cycle)) throw Error("the chain is not a cycle of the base complex");

  ChernResult r;
  r.fiber_integral = bc.fiber_integral;
  r.curvature = std::move(bc.curvature);
  r.integral = integrate(bundle.base, cycle, r.curvature);
  const Rational ratio = r.integral / r.fiber_integral;
  if (ratio.get_den() != 1) throw Error("Chern number " + to_string(ratio) + " is not an integer");
  r.chern = ratio.get_num().get_si();
  return r;
}

}  // namespace kcell
