#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

namespace {

Rational double_factorial(int m) {
  Rational r = 1;
  for (int k = m; k > 1; k -= 2) r *= k;
  return r;
}

std::map<std::pair<int, std::vector<int>>, Rational> wk_memo;

}  // namespace

Rational witten_kontsevich(int genus, std::vector<int> d) {
  const int n = int(d.size());
  if (genus < 0 || 2 * genus - 2 + n <= 0) return 0;
  for (int x : d)
    if (x < 0) return 0;
  if (std::accumulate(d.begin(), d.end(), 0) != 3 * genus - 3 + n) return 0;
  std::sort(d.begin(), d.end(), std::greater<>());
  if (genus == 0 && n == 3) return 1;
  if (genus == 1 && n == 1) return Rational(1, 24);
  const auto key = std::make_pair(genus, d);
  if (auto it = wk_memo.find(key); it != wk_memo.end()) return it->second;

  // Remove the largest exponent k + 1 and apply DVV.
  const int k = d.front() - 1;
  const std::vector<int> s(d.begin() + 1, d.end());
  Rational total = 0;
  for (size_t j = 0; j < s.size(); ++j) {
    std::vector<int> t = s;
    t[j] += k;
    total += double_factorial(2 * k + 2 * s[j] + 1) / double_factorial(2 * s[j] - 1) * witten_kontsevich(genus, t);
  }
  for (int r = 0; r <= k - 1; ++r) {
    const int q = k - 1 - r;
    const Rational w = double_factorial(2 * r + 1) * double_factorial(2 * q + 1) / 2;
    std::vector<int> t = s;
    t.push_back(r);
    t.push_back(q);
    Rational split = witten_kontsevich(genus - 1, t);
    for (int g1 = 0; g1 <= genus; ++g1) {
      for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
        std::vector<int> a{r}, b{q};
        for (size_t j = 0; j < s.size(); ++j) (mask >> j & 1 ? a : b).push_back(s[j]);
        split += witten_kontsevich(g1, a) * witten_kontsevich(genus - g1, b);
      }
    }
    total += w * split;
  }
  const Rational value = total / double_factorial(2 * k + 3);
  wk_memo[key] = value;
  return value;
}

Rational euler_characteristic(int genus, int n) {
  if (genus == 0) {
    if (n < 3) return 0;
    Rational chi = 1;  // M_{0,3} is a point
    for (int m = 3; m < n; ++m) chi *= 2 - m;
    return chi;
  }
  // Bernoulli numbers B_0..B_{2g}.
  std::vector<Rational> bern(2 * genus + 1);
  bern[0] = 1;
  for (int m = 1; m <= 2 * genus; ++m) {
    Rational s = 0;
    Rational binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * bern[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    bern[m] = -s / (m + 1);
  }
  Rational chi = -bern[2 * genus] / (2 * genus);
  for (int m = 1; m < n; ++m) chi *= 2 - 2 * genus - m;
  return chi;
}

namespace {

struct Raw {
  std::vector<int> sigma0;
  std::vector<int> vertex;
  std::vector<int> defect;
  std::vector<int> face_label;  // per half-edge
};

Raw raw(const kcell::StableRibbonGraph& g) {
  const auto& data = g.data();
  Raw r;
  r.sigma0.assign(data.half_edges, -1);
  r.vertex.assign(data.half_edges, -1);
  for (size_t v = 0; v < data.vertices.size(); ++v) {
    r.defect.push_back(data.vertices[v].defect);
    for (const auto& c : data.vertices[v].cycles) {
      for (size_t j = 0; j < c.size(); ++j) {
        r.sigma0[c[j]] = c[(j + 1) % c.size()];
        r.vertex[c[j]] = int(v);
      }
    }
  }
  // Faces by walking h -> sigma0^-1(h ^ 1) from the labeled representatives.
  std::vector<int> inv(data.half_edges);
  for (int h = 0; h < data.half_edges; ++h) inv[r.sigma0[h]] = h;
  r.face_label.assign(data.half_edges, 0);
  for (auto [h0, label] : data.face_labels) {
    int h = h0;
    do {
      r.face_label[h] = label;
      h = inv[h ^ 1];
    } while (h != h0);
  }
  return r;
}

}  // namespace

long count_isomorphisms(const kcell::StableRibbonGraph& a, const kcell::StableRibbonGraph& b) {
  if (a.num_half_edges() != b.num_half_edges() || a.num_vertices() != b.num_vertices()) return 0;
  const Raw ra = raw(a), rb = raw(b);
  const int E = a.num_edges();
  std::vector<int> perm(E);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    for (unsigned flips = 0; flips < (1u << E); ++flips) {
      auto phi = [&](int h) { return 2 * perm[h / 2] + ((h & 1) ^ int(flips >> (h / 2) & 1)); };
      bool ok = true;
      std::vector<int> vmap(a.num_vertices(), -1);
      for (int h = 0; h < 2 * E && ok; ++h) {
        const int x = phi(h);
        ok = phi(ra.sigma0[h]) == rb.sigma0[x] && ra.face_label[h] == rb.face_label[x];
        int& slot = vmap[ra.vertex[h]];
        if (slot < 0) slot = rb.vertex[x];
        ok = ok && slot == rb.vertex[x] && ra.defect[ra.vertex[h]] == rb.defect[rb.vertex[x]];
      }
      if (ok) {
        std::vector<int> sorted = vmap;
        std::sort(sorted.begin(), sorted.end());
        ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      }
      if (ok) ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Rational trivalent_mass(int genus, int n) {
  const int E = 6 * genus - 6 + 3 * n;
  const int H = 2 * E;
  std::vector<int> s0(H, -1);
  long hits = 0;

  auto examine = [&]() {
    std::vector<int> inv(H);
    for (int h = 0; h < H; ++h) inv[s0[h]] = h;
    std::vector<bool> seen(H, false);
    int faces = 0;
    for (int h = 0; h < H; ++h) {
      if (seen[h]) continue;
      ++faces;
      for (int x = h; !seen[x]; x = inv[x ^ 1]) seen[x] = true;
    }
    // Connectivity through sigma0 and sigma1.
    std::vector<int> parent(H);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int h = 0; h < H; ++h) {
      parent[find(h)] = find(s0[h]);
      parent[find(h)] = find(h ^ 1);
    }
    for (int h = 0; h < H; ++h)
      if (find(h) != find(0)) return;
    const int V = H / 3;
    if (faces == n && V - E + faces == 2 - 2 * genus) ++hits;
  };

  std::function<void()> place = [&]() {
    int a = 0;
    while (a < H && s0[a] >= 0) ++a;
    if (a == H) {
      examine();
      return;
    }
    for (int b = 0; b < H; ++b) {
      if (b == a || s0[b] >= 0) continue;
      for (int c = 0; c < H; ++c) {
        if (c == a || c == b || s0[c] >= 0) continue;
        s0[a] = b;
        s0[b] = c;
        s0[c] = a;
        place();
        s0[a] = s0[b] = s0[c] = -1;
      }
    }
  };
  place();

  Rational group = 1;
  for (int k = 2; k <= E; ++k) group *= k;
  for (int k = 0; k < E; ++k) group *= 2;
  Rational labelings = 1;
  for (int k = 2; k <= n; ++k) labelings *= k;
  return Rational(hits) * labelings / group;
}

std::pair<kcell::Complex, kcell::Complex> cross_ratio(const kcell::PointConfig& x) {
  using kcell::Complex;
  auto det = [&](int i, int j) {
    const Complex zi = x[i].infinite ? Complex(1) : x[i].value, wi = x[i].infinite ? Complex(0) : Complex(1);
    const Complex zj = x[j].infinite ? Complex(1) : x[j].value, wj = x[j].infinite ? Complex(0) : Complex(1);
    return zi * wj - zj * wi;
  };
  return {det(0, 2) * det(1, 3), det(0, 3) * det(1, 2)};
}

}  // namespace oracle
