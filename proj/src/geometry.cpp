#include "kcell/geometry.hpp"

#include <algorithm>
#include <set>

namespace kcell {

Rational Halfspace::slack(const RationalVector& x) const {
  Rational s = -offset;
  for (size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

Polytope::Polytope(int dim, std::vector<Halfspace> constraints) : dim_(dim), constraints_(std::move(constraints)) {
  for (const auto& h : constraints_) {
    if (int(h.normal.size()) != dim_) throw Error("half-space normal has wrong dimension");
  }
}

Polytope Polytope::box(const RationalVector& lo, const RationalVector& hi) {
  const int d = int(lo.size());
  std::vector<Halfspace> hs;
  for (int i = 0; i < d; ++i) {
    RationalVector n(d);
    n[i] = 1;
    hs.push_back({n, lo[i], false});
    n[i] = -1;
    hs.push_back({n, -hi[i], false});
  }
  return Polytope(d, std::move(hs));
}

Polytope Polytope::simplex(const std::vector<RationalVector>& verts) {
  const int d = int(verts.size()) - 1;
  if (d < 0) throw Error("simplex needs at least one vertex");
  std::vector<Halfspace> hs;
  for (int skip = 0; skip <= d && d > 0; ++skip) {
    // Facet through all vertices but `skip`: solve for a normal n with
    // n.(v_j - v_base) = 0.
    std::vector<RationalVector> facet;
    for (int j = 0; j <= d; ++j)
      if (j != skip) facet.push_back(verts[j]);
    Matrix m(d - 1, d);
    for (int r = 0; r + 1 < int(facet.size()); ++r)
      for (int c = 0; c < d; ++c) m(r, c) = facet[r + 1][c] - facet[0][c];
    // Null space vector of m.
    Matrix red = m;
    const auto piv = row_reduce(red);
    int free_col = 0;
    while (std::find(piv.begin(), piv.end(), free_col) != piv.end()) ++free_col;
    RationalVector n(d);
    n[free_col] = 1;
    for (size_t r = 0; r < piv.size(); ++r) n[piv[r]] = -red(int(r), free_col);
    Halfspace h{n, 0, false};
    h.offset = 0;
    for (int c = 0; c < d; ++c) h.offset += n[c] * facet[0][c];
    if (h.slack(verts[skip]) < 0) {
      for (auto& x : h.normal) x = -x;
      h.offset = -h.offset;
    }
    if (h.slack(verts[skip]) == 0) throw Error("degenerate simplex");
    hs.push_back(std::move(h));
  }
  return Polytope(d, std::move(hs));
}

bool Polytope::contains(const RationalVector& x, bool closure) const {
  if (int(x.size()) != dim_) return false;
  for (const auto& h : constraints_) {
    const Rational s = h.slack(x);
    if (s < 0 || (!closure && h.strict && s == 0)) return false;
  }
  return true;
}

std::vector<RationalVector> Polytope::vertices() const {
  std::set<RationalVector> found;
  if (dim_ == 0) {
    if (contains({})) found.insert(RationalVector{});
    return {found.begin(), found.end()};
  }
  const int m = int(constraints_.size());
  std::vector<int> pick(dim_);
  // Iterate over all dim-subsets of the constraints.
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + std::min(dim_, m), true);
  if (m < dim_) return {};
  do {
    Matrix a(dim_, dim_);
    RationalVector b(dim_);
    int r = 0;
    for (int i = 0; i < m; ++i) {
      if (!mask[i]) continue;
      for (int c = 0; c < dim_; ++c) a(r, c) = constraints_[i].normal[c];
      b[r] = constraints_[i].offset;
      ++r;
    }
    auto x = solve_unique(a, b);
    if (x && contains(*x)) found.insert(*x);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return {found.begin(), found.end()};
}

bool Polytope::has_interior() const {
  const auto v = vertices();
  if (v.empty()) return false;
  if (dim_ == 0) return true;
  return affine_dimension(v) == dim_;
}

namespace {

struct FaceLattice {
  const std::vector<RationalVector>& verts;
  const std::vector<Halfspace>& constraints;

  std::vector<std::vector<int>> triangulate(const std::vector<int>& face, int face_dim) const {
    if (face_dim == 0) return {{face.front()}};
    const int apex = face.front();
    std::set<std::vector<int>> facets;
    for (const auto& h : constraints) {
      std::vector<int> sub;
      for (int v : face) {
        if (h.slack(verts[v]) == 0) sub.push_back(v);
      }
      if (sub.size() == face.size() || sub.empty()) continue;
      std::vector<RationalVector> pts;
      for (int v : sub) pts.push_back(verts[v]);
      if (affine_dimension(pts) == face_dim - 1) facets.insert(sub);
    }
    std::vector<std::vector<int>> out;
    for (const auto& f : facets) {
      if (std::find(f.begin(), f.end(), apex) != f.end()) continue;
      for (auto s : triangulate(f, face_dim - 1)) {
        s.insert(s.begin(), apex);
        out.push_back(std::move(s));
      }
    }
    return out;
  }
};

}  // namespace

std::vector<Simplex> Polytope::triangulate() const {
  const auto verts = vertices();
  if (verts.empty()) return {};
  if (dim_ == 0) return {Simplex{verts.front()}};
  if (affine_dimension(verts) != dim_) throw Error("cannot triangulate a lower-dimensional polytope");
  std::vector<int> all(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) all[i] = int(i);
  FaceLattice lattice{verts, constraints_};
  std::vector<Simplex> out;
  for (const auto& idx : lattice.triangulate(all, dim_)) {
    Simplex s;
    for (int v : idx) s.push_back(verts[v]);
    out.push_back(std::move(s));
  }
  return out;
}

Rational signed_volume(const Simplex& s) {
  const int d = int(s.size()) - 1;
  if (d == 0) return 1;
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = s[i + 1][j] - s[0][j];
  return determinant(m) / factorial(d);
}

Rational Polytope::volume() const {
  Rational vol = 0;
  for (const auto& s : triangulate()) vol += abs(signed_volume(s));
  return vol;
}

RationalVector Polytope::interior_point() const {
  const auto verts = vertices();
  if (verts.empty()) throw Error("empty polytope has no interior point");
  RationalVector c(dim_);
  for (const auto& v : verts)
    for (int i = 0; i < dim_; ++i) c[i] += v[i];
  for (auto& x : c) x /= int(verts.size());
  return c;
}

}  // namespace kcell
