#include "kcell/suite.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "kcell/stable.hpp"

namespace kcell {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t n = a.size();
  for (size_t r = 0; r < n; ++r) {
    size_t i = 0;
    while (i < n && a[i] == b[(i + r) % n]) ++i;
    if (i == n) return true;
  }
  return false;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

RibbonGraphData random_stable_graph(Rng& rng, int max_edges) {
  if (max_edges < 1) throw Error("random graphs need at least one edge");
  for (;;) {
    const int E = uniform(rng, 1, max_edges);
    const int H = 2 * E;
    const int V = uniform(rng, 1, std::min(H, E + 1));
    std::vector<int> hs(H);
    std::iota(hs.begin(), hs.end(), 0);
    std::shuffle(hs.begin(), hs.end(), rng);
    std::vector<int> cuts(H - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(V - 1);
    cuts.push_back(0);
    cuts.push_back(H);
    std::sort(cuts.begin(), cuts.end());

    RibbonGraphData data;
    data.half_edges = H;
    for (int v = 0; v < V; ++v) {
      std::vector<int> block(hs.begin() + cuts[v], hs.begin() + cuts[v + 1]);
      const double u = std::uniform_real_distribution<double>(0, 1)(rng);
      int ncycles = u < 0.75 ? 1 : u < 0.95 ? 2 : 3;
      ncycles = std::min<int>(ncycles, int(block.size()));
      std::vector<int> splits(block.size() - 1);
      std::iota(splits.begin(), splits.end(), 1);
      std::shuffle(splits.begin(), splits.end(), rng);
      splits.resize(ncycles - 1);
      splits.push_back(0);
      splits.push_back(int(block.size()));
      std::sort(splits.begin(), splits.end());
      VertexData vd;
      for (int c = 0; c < ncycles; ++c) vd.cycles.emplace_back(block.begin() + splits[c], block.begin() + splits[c + 1]);
      const double w = std::uniform_real_distribution<double>(0, 1)(rng);
      vd.defect = w < 0.7 ? 0 : w < 0.9 ? 1 : 2;
      if (block.size() == 1 || (block.size() == 2 && ncycles == 1)) vd.defect = std::max(vd.defect, 1);
      data.vertices.push_back(std::move(vd));
    }

    // Faces are the cycles of sigma2(h) = sigma0^-1(h ^ 1); label them randomly.
    std::vector<int> s0inv(H);
    for (const auto& v : data.vertices)
      for (const auto& c : v.cycles)
        for (size_t j = 0; j < c.size(); ++j) s0inv[c[(j + 1) % c.size()]] = c[j];
    std::vector<int> reps;
    std::vector<bool> seen(H, false);
    for (int h = 0; h < H; ++h) {
      if (seen[h]) continue;
      reps.push_back(h);
      for (int x = h; !seen[x]; x = s0inv[x ^ 1]) seen[x] = true;
    }
    std::vector<int> labels(reps.size());
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (size_t i = 0; i < reps.size(); ++i) data.face_labels[reps[i]] = labels[i];

    if (validate(data).ok()) return data;
  }
}

Rational random_rational(Rng& rng, long max_num, long max_den) {
  return make_rational(std::uniform_int_distribution<long>(-max_num, max_num)(rng),
                       std::uniform_int_distribution<long>(1, max_den)(rng));
}

Polynomial random_polynomial(Rng& rng, int num_vars, int max_degree, int max_terms) {
  Polynomial p(num_vars);
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(num_vars, 0);
    const int deg = uniform(rng, 0, max_degree);
    for (int r = 0; r < deg && num_vars > 0; ++r) ++e[uniform(rng, 0, num_vars - 1)];
    p.add_term(e, random_rational(rng));
  }
  return p;
}

LocalForm random_form(Rng& rng, int dim, int degree, int max_coefficient_degree) {
  LocalForm w(dim, degree);
  if (degree > dim) return w;
  std::vector<LocalForm::Basis> bases;
  for (LocalForm::Basis b = 0; b < (LocalForm::Basis(1) << dim); ++b)
    if (std::popcount(b) == degree) bases.push_back(b);
  for (auto b : bases) {
    if (chance(rng, 0.7)) w.add_term(b, random_polynomial(rng, dim, max_coefficient_degree));
  }
  return w;
}

RationalVector random_point(Rng& rng, const Polytope& p) {
  const auto verts = p.vertices();
  if (verts.empty()) throw Error("random point of an empty or unbounded polytope");
  RationalVector x(p.dim());
  long total = 0;
  std::vector<long> w(verts.size());
  while (total == 0) {
    total = 0;
    for (auto& wi : w) total += (wi = std::uniform_int_distribution<long>(0, 5)(rng));
  }
  for (size_t v = 0; v < verts.size(); ++v)
    for (int i = 0; i < p.dim(); ++i) x[i] += verts[v][i] * make_rational(w[v], total);
  return x;
}

RationalVector random_lengths(Rng& rng, int edges) {
  RationalVector l;
  for (int e = 0; e < edges; ++e) {
    l.push_back(make_rational(std::uniform_int_distribution<long>(1, 60)(rng),
                              std::uniform_int_distribution<long>(1, 9)(rng)));
  }
  return l;
}

namespace {

AffineMap map_of(std::vector<std::vector<long>> lin, std::vector<long> off) {
  const int rows = int(off.size());
  const int cols = lin.empty() ? 0 : int(lin.front().size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = lin[r][c];
  RationalVector o;
  for (long x : off) o.emplace_back(x);
  return AffineMap(m, o);
}

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Adds polytope `p` with embedding `emb`.
int put(CorpusComplex& c, Polytope p, AffineMap emb, bool negative) {
  c.embedding.push_back(std::move(emb));
  c.negative.push_back(negative);
  return c.complex.add_polytope(std::move(p));
}

std::vector<int> top_polytopes(const CorpusComplex& c) {
  std::vector<bool> is_face(c.complex.size(), false);
  for (const auto& g : c.complex.gluings()) is_face[g.face] = true;
  std::vector<int> out;
  for (int i = 0; i < c.complex.size(); ++i)
    if (!is_face[i]) out.push_back(i);
  return out;
}

}  // namespace

CorpusComplex two_squares() {
  CorpusComplex c{"two-squares", {}, 2, {}, {}};
  const int right = put(c, Polytope::box(ints({0, 0}), ints({1, 1})), AffineMap::identity(2), false);
  const int left = put(c, Polytope::box(ints({-1, 0}), ints({0, 1})), AffineMap::identity(2), true);
  const AffineMap edge_map = map_of({{0}, {1}}, {0, 0});
  const int edge = put(c, Polytope::box(ints({0}), ints({1})), edge_map, false);
  c.complex.add_gluing(edge, right, edge_map);
  c.complex.add_gluing(edge, left, edge_map);
  return c;
}

ExteriorForm two_squares_form(const CorpusComplex& c) {
  auto one = [](int dim) { return Polynomial::constant(dim, 1); };
  LocalForm right = LocalForm::term(2, 1, one(2)) + LocalForm::term(2, 2, one(2));
  LocalForm left = LocalForm::term(2, 1, one(2)) * Rational(-2) + LocalForm::term(2, 2, one(2));
  LocalForm edge = LocalForm::term(1, 1, one(1));
  (void)c;
  return ExteriorForm(1, {right, left, edge});
}

std::vector<CorpusComplex> stokes_corpus() {
  std::vector<CorpusComplex> out;
  out.push_back(two_squares());
  {
    CorpusComplex c{"segments", {}, 1, {}, {}};
    const int r = put(c, Polytope::box(ints({0}), ints({1})), AffineMap::identity(1), false);
    const int l = put(c, Polytope::box(ints({-1}), ints({0})), AffineMap::identity(1), true);
    const AffineMap pt = map_of({{}}, {0});
    const int p = put(c, Polytope(0, {}), AffineMap(Matrix(1, 0), ints({0})), false);
    c.complex.add_gluing(p, r, AffineMap(Matrix(1, 0), ints({0})));
    c.complex.add_gluing(p, l, AffineMap(Matrix(1, 0), ints({0})));
    (void)pt;
    out.push_back(std::move(c));
  }
  {
    CorpusComplex c{"triangle-square", {}, 2, {}, {}};
    const int t = put(c, Polytope::simplex({ints({0, 0}), ints({1, 0}), ints({0, 1})}), AffineMap::identity(2), false);
    const int s = put(c, Polytope::box(ints({-1, 0}), ints({0, 1})), AffineMap::identity(2), true);
    const AffineMap edge_map = map_of({{0}, {1}}, {0, 0});
    const int e = put(c, Polytope::box(ints({0}), ints({1})), edge_map, false);
    c.complex.add_gluing(e, t, edge_map);
    c.complex.add_gluing(e, s, edge_map);
    out.push_back(std::move(c));
  }
  {
    CorpusComplex c{"cube", {}, 3, {}, {}};
    put(c, Polytope::box(ints({0, 0, 0}), ints({1, 1, 1})), AffineMap::identity(3), false);
    out.push_back(std::move(c));
  }
  {
    CorpusComplex c{"tetra-pair", {}, 3, {}, {}};
    const int a = put(c, Polytope::simplex({ints({0, 0, 0}), ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}),
                      AffineMap::identity(3), false);
    const int b = put(c, Polytope::simplex({ints({0, 0, 0}), ints({-1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}),
                      AffineMap::identity(3), true);
    const AffineMap tri_map = map_of({{0, 0}, {1, 0}, {0, 1}}, {0, 0, 0});
    const int f = put(c, Polytope::simplex({ints({0, 0}), ints({1, 0}), ints({0, 1})}), tri_map, false);
    c.complex.add_gluing(f, a, tri_map);
    c.complex.add_gluing(f, b, tri_map);
    out.push_back(std::move(c));
  }
  {
    CorpusComplex c{"box-pair", {}, 3, {}, {}};
    const int a = put(c, Polytope::box(ints({0, 0, 0}), ints({1, 1, 1})), AffineMap::identity(3), false);
    const int b = put(c, Polytope::box(ints({-1, 0, 0}), ints({0, 1, 1})), AffineMap::identity(3), true);
    const AffineMap sq_map = map_of({{0, 0}, {1, 0}, {0, 1}}, {0, 0, 0});
    const int f = put(c, Polytope::box(ints({0, 0}), ints({1, 1})), sq_map, false);
    c.complex.add_gluing(f, a, sq_map);
    c.complex.add_gluing(f, b, sq_map);
    out.push_back(std::move(c));
  }
  return out;
}

ExteriorForm random_piecewise_form(Rng& rng, const CorpusComplex& c, int degree) {
  const int m = c.ambient;
  const LocalForm global = random_form(rng, m, degree);
  // Terms vanishing on x_0 = 0: x_0 * eta + dx_0 ^ theta.
  LocalForm jump = Polynomial::variable(m, 0) * random_form(rng, m, degree);
  if (degree >= 1) jump += wedge(LocalForm::differential(m, 0), random_form(rng, m, degree - 1));
  std::vector<LocalForm> pieces;
  for (int i = 0; i < c.complex.size(); ++i) {
    LocalForm w = pullback(global, c.embedding[i]);
    if (c.negative[i]) w += pullback(jump, c.embedding[i]);
    pieces.push_back(std::move(w));
  }
  return ExteriorForm(degree, std::move(pieces));
}

Chain random_chain(Rng& rng, const CorpusComplex& c, int degree, int pieces) {
  std::vector<int> candidates;
  for (int i : top_polytopes(c))
    if (c.complex.polytope(i).dim() >= degree) candidates.push_back(i);
  if (candidates.empty()) throw Error("no polytope carries " + std::to_string(degree) + "-simplices");
  Chain chain;
  for (int s = 0; s < pieces; ++s) {
    const int i = candidates[uniform(rng, 0, int(candidates.size()) - 1)];
    Piece p{i, {}};
    for (int v = 0; v <= degree; ++v) p.vertices.push_back(random_point(rng, c.complex.polytope(i)));
    Rational coef = random_rational(rng, 5, 3);
    if (coef == 0) coef = 1;
    chain.add(coef, std::move(p));
  }
  return chain;
}

long check_contraction_laws(const StableRibbonGraph& g, Rng& rng, int max_subsets, std::vector<SuiteFailure>& out) {
  const Json input{{"graph", graph_to_json(g.data())}};
  long cases = 0;
  auto fail = [&](const std::string& check, const std::string& msg, Json extra = Json::object()) {
    Json in = input;
    for (auto& [k, v] : extra.items()) in[k] = v;
    out.push_back(SuiteFailure{check, msg, in});
  };
  const int E = g.num_edges();
  const int gen = genus(g);
  std::vector<int> singles;
  for (int e = 0; e < E; ++e)
    if (is_contractible(g, {e})) singles.push_back(e);

  for (int e : singles) {
    ++cases;
    const Contraction c = contract_edge_mapped(g, e);
    const StableRibbonGraph& h = c.graph;
    if (h.num_edges() != E - 1) fail("edge-count", "contracting an edge did not remove exactly one edge", {{"edges", {e}}});
    if (genus(h) != gen) {
      fail("genus", "genus " + std::to_string(gen) + " became " + std::to_string(genus(h)), {{"edges", {e}}});
    }
    if (h.num_faces() != g.num_faces()) fail("faces", "face count changed", {{"edges", {e}}});
    if (!h.is_stable()) fail("stability", "contraction produced an unstable graph", {{"edges", {e}}});
    for (int label = 1; label <= g.num_faces() && h.num_faces() == g.num_faces(); ++label) {
      std::vector<int> expect;
      for (int x : g.face(label).half_edges) {
        const int k = StableRibbonGraph::edge_of(x);
        if (k != e) expect.push_back(2 * c.edge_map[k] + (x & 1));
      }
      if (!same_cycle(expect, h.face(label).half_edges)) {
        fail("face-word", "face " + std::to_string(label) + " is not the old word with the edge deleted", {{"edges", {e}}});
      }
    }
  }

  const CanonicalKey none;
  for (size_t a = 0; a < singles.size(); ++a) {
    for (size_t b = a + 1; b < singles.size(); ++b) {
      const int e = singles[a], f = singles[b];
      if (!is_contractible(g, {e, f})) continue;
      ++cases;
      const Contraction ce = contract_edge_mapped(g, e);
      const Contraction cf = contract_edge_mapped(g, f);
      const CanonicalKey k1 = canonical_key(contract_edge(ce.graph, ce.edge_map[f]));
      const CanonicalKey k2 = canonical_key(contract_edge(cf.graph, cf.edge_map[e]));
      if (k1 != k2) fail("commutativity", "contracting e then f differs from f then e", {{"edges", {e, f}}});
      if (canonical_key(contract_set(g, {e, f})) != k1) {
        fail("contract-set", "contract_set differs from sequential contraction", {{"edges", {e, f}}});
      }
    }
  }

  // Subsets: all of them when few, otherwise a random sample.
  std::vector<std::vector<int>> subsets;
  if (E < 31 && (1L << E) <= max_subsets) {
    for (long mask = 1; mask < (1L << E); ++mask) {
      std::vector<int> s;
      for (int e = 0; e < E; ++e)
        if (mask >> e & 1) s.push_back(e);
      subsets.push_back(std::move(s));
    }
  } else {
    for (int t = 0; t < max_subsets; ++t) {
      std::vector<int> s;
      for (int e = 0; e < E; ++e)
        if (chance(rng, 0.4)) s.push_back(e);
      if (!s.empty()) subsets.push_back(std::move(s));
    }
  }
  for (const auto& s : subsets) {
    if (!is_contractible(g, s)) continue;
    ++cases;
    std::vector<int> order = s;
    std::shuffle(order.begin(), order.end(), rng);
    StableRibbonGraph cur = g;
    std::vector<int> map(E);
    std::iota(map.begin(), map.end(), 0);
    bool ok = true;
    for (int e : order) {
      if (!is_contractible(cur, {map[e]})) {
        fail("contract-set", "an intermediate step of an admissible set is not contractible", {{"edges", s}});
        ok = false;
        break;
      }
      Contraction c = contract_edge_mapped(cur, map[e]);
      for (int& m : map) m = m < 0 ? -1 : c.edge_map[m];
      cur = std::move(c.graph);
    }
    if (!ok) continue;
    const StableRibbonGraph whole = contract_set(g, s);
    if (canonical_key(whole) != canonical_key(cur)) {
      fail("contract-set", "contract_set differs from folding in order " + join_ints(order), {{"edges", s}});
    }
    if (genus(whole) != gen) fail("genus", "contract_set changed the genus", {{"edges", s}});
    if (whole.num_faces() != g.num_faces()) fail("faces", "contract_set changed the face count", {{"edges", s}});
  }
  (void)none;
  return cases;
}

long check_stokes_case(Rng& rng, const CorpusComplex& c, std::vector<SuiteFailure>& out) {
  int top = 0;
  for (int i : top_polytopes(c)) top = std::max(top, c.complex.polytope(i).dim());
  const bool whole = chance(rng, 0.25);
  const int k = whole ? top : uniform(rng, 1, top);
  Chain chain;
  if (whole) {
    for (int i : top_polytopes(c)) chain.add(1, Chain::polytope(c.complex, i));
  } else {
    chain = random_chain(rng, c, k, uniform(rng, 1, 3));
  }
  const ExteriorForm alpha = random_piecewise_form(rng, c, k - 1);
  const Json input{{"complex", c.name}, {"chain", chain_to_json(chain)}, {"alpha", exterior_form_to_json(alpha)}};
  const FormReport fr = validate_form(c.complex, alpha);
  if (!fr.ok) out.push_back(SuiteFailure{"form-compatibility", fr.message, input});
  const StokesResult r = stokes_check(c.complex, chain, alpha);
  if (!r.equal) {
    out.push_back(SuiteFailure{"stokes", "int d(alpha) = " + to_string(r.lhs) + " but int over the boundary = " + to_string(r.rhs), input});
  }
  if (!chain.boundary().boundary().simplified().empty()) {
    out.push_back(SuiteFailure{"boundary", "the boundary of a boundary is not zero", input});
  }
  if (whole) {
    const Chain reduced = reduce_through_gluings(c.complex, chain.boundary());
    const Rational via_faces = integrate(c.complex, reduced, alpha);
    if (via_faces != r.rhs) {
      out.push_back(SuiteFailure{"stokes", "integral over the reduced boundary differs: " + to_string(via_faces), input});
    }
  }
  return 1;
}

long check_homotopy_case(Rng& rng, std::vector<SuiteFailure>& out) {
  const int dim = uniform(rng, 1, 3);
  const int k = uniform(rng, 1, std::min(dim, 3));
  RationalVector lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    lo[i] = -uniform(rng, 1, 3);
    hi[i] = uniform(rng, 1, 3);
  }
  const Polytope box = Polytope::box(lo, hi);
  const RationalVector apex = random_point(rng, box);
  const LocalForm w = random_form(rng, dim, k, 3);
  const LocalForm hw = cone_homotopy(box, apex, w);
  const LocalForm dw = d(w);
  LocalForm lhs = d(hw);
  if (dw.degree() <= dim) lhs += cone_homotopy(box, apex, dw);
  if (!(lhs == w)) {
    out.push_back(SuiteFailure{"homotopy", "d h w + h d w = " + lhs.to_string() + " differs from w",
                               Json{{"form", form_to_json(w)}, {"apex", rationals_to_json(apex)},
                                    {"box", polytope_to_json(box)}}});
  }
  return 1;
}

namespace {

long scaled(double scale, long n) { return std::max(1L, long(n * scale + 0.5)); }

const std::vector<std::pair<int, int>> kSmallCases = {{0, 3}, {1, 1}, {0, 4}};

void suite_contraction(const SuiteOptions& o, Rng& rng, SuiteReport& r) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
    for (const auto& cell : enumerate_cells(g, n)) {
      r.cases += check_contraction_laws(cell.graph.representative, rng, 64, r.failures);
    }
  }
  const long count = scaled(o.scale, 1000);
  for (long t = 0; t < count; ++t) {
    StableRibbonGraph g(random_stable_graph(rng, 8));
    r.cases += check_contraction_laws(g, rng, 16, r.failures);
  }
}

void suite_stokes(const SuiteOptions& o, Rng& rng, SuiteReport& r) {
  CorpusComplex squares = two_squares();
  const ExteriorForm form = two_squares_form(squares);
  ++r.cases;
  if (!squares.complex.validate().ok) r.failures.push_back({"complex", squares.complex.validate().message, {}});
  if (!validate_form(squares.complex, form).ok) r.failures.push_back({"form-compatibility", "two-square form rejected", {}});
  Chain both;
  both.add(1, Chain::polytope(squares.complex, 0));
  both.add(1, Chain::polytope(squares.complex, 1));
  const StokesResult sr = stokes_check(squares.complex, both, form);
  if (!sr.equal) r.failures.push_back({"stokes", "two-square example: " + to_string(sr.lhs) + " vs " + to_string(sr.rhs), {}});

  const auto corpus = stokes_corpus();
  const long count = scaled(o.scale, 500);
  for (long t = 0; t < count; ++t) {
    r.cases += check_stokes_case(rng, corpus[t % corpus.size()], r.failures);
  }
  // d o d = 0 and the graded Leibniz rule on random forms.
  for (long t = 0; t < scaled(o.scale, 100); ++t) {
    ++r.cases;
    const int dim = uniform(rng, 1, 4);
    const int p = uniform(rng, 0, 3), q = uniform(rng, 0, 3);
    const LocalForm a = random_form(rng, dim, p), b = random_form(rng, dim, q);
    if (!d(d(a)).is_zero()) r.failures.push_back({"d-squared", "d(d(w)) = " + d(d(a)).to_string(), {{"form", form_to_json(a)}}});
    LocalForm rhs = wedge(d(a), b);
    LocalForm second = wedge(a, d(b));
    rhs += p % 2 ? second * Rational(-1) : second;
    if (!(d(wedge(a, b)) == rhs)) {
      r.failures.push_back({"leibniz", "graded Leibniz rule fails", {{"a", form_to_json(a)}, {"b", form_to_json(b)}}});
    }
  }
  for (long t = 0; t < scaled(o.scale, 200); ++t) r.cases += check_homotopy_case(rng, r.failures);
}

void suite_alpha(const SuiteOptions& o, Rng& rng, SuiteReport& r) {
  const long per_cell = scaled(o.scale, 20);
  for (auto [g, n] : kSmallCases) {
    for (const auto& cell : enumerate_cells(g, n)) {
      const StableRibbonGraph& G = cell.graph.representative;
      for (long t = 0; t < per_cell; ++t) {
        const RationalVector l = random_lengths(rng, G.num_edges());
        for (int i = 1; i <= n; ++i) {
          ++r.cases;
          const PolygonFiber fiber = polygon_fiber(G, i, l);
          const Rational v = fiber_integral_alpha(fiber);
          if (v != -1) {
            r.failures.push_back({"fiber-integral", "fiber integral " + to_string(v),
                                  {{"graph", graph_to_json(G.data())}, {"face", i}, {"lengths", rationals_to_json(l)}}});
          }
          const FiberComplex fc = alpha_form(fiber);
          const FormReport fr = validate_form(fc.complex, fc.alpha);
          if (!fr.ok || !fc.complex.validate().ok) {
            r.failures.push_back({"fiber-form", "alpha is not a form on the fiber complex: " + fr.message,
                                  {{"graph", graph_to_json(G.data())}, {"face", i}, {"lengths", rationals_to_json(l)}}});
          }
        }
      }
    }
  }
}

void suite_omega(const SuiteOptions& o, Rng& rng, SuiteReport& r) {
  for (auto [g, n] : kSmallCases) {
    for (const auto& cell : enumerate_cells(g, n)) {
      const StableRibbonGraph& G = cell.graph.representative;
      const RationalVector l = random_lengths(rng, G.num_edges());
      const CellPolytope cp = cell_polytope(G, perimeters(G, l));
      const Json input{{"graph", graph_to_json(G.data())}, {"perimeters", rationals_to_json(cp.perimeters)}};
      for (int i = 1; i <= n; ++i) {
        ++r.cases;
        const BasicnessReport br = check_basic(cp, i);
        if (!br.ok) r.failures.push_back({"basic", br.message, input});
        const LocalForm ref = restrict_to_chart(omega(G, i, cp.perimeters[i - 1]).local(), cp.chart);
        for (int s = 1; s < G.face(i).degree(); ++s) {
          if (!(restrict_to_chart(omega(G, i, cp.perimeters[i - 1], s).local(), cp.chart) == ref)) {
            r.failures.push_back({"start-side", "omega depends on the starting side " + std::to_string(s), input});
          }
        }
      }
    }
  }
  // Chart independence of cell contributions.
  struct Q {
    int g;
    std::vector<int> d;
  };
  for (const Q& q : std::vector<Q>{{0, {1, 0, 0, 0}}, {1, {1}}, {1, {1, 1}}, {1, {2, 0}}}) {
    const int n = int(q.d.size());
    const RationalVector p = random_generic_perimeters(n, rng());
    for (const auto& cls : enumerate_trivalent(q.g, n)) {
      const CellContribution base = integrate_cell(cls, q.d, p);
      for (long t = 0; t < scaled(o.scale, 3); ++t) {
        ++r.cases;
        std::vector<int> order(cls.representative.num_edges());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const CellContribution other = integrate_cell(cls, q.d, p, order);
        if (other.contribution != base.contribution) {
          r.failures.push_back({"chart", "contribution " + to_string(base.contribution) + " became " +
                                             to_string(other.contribution) + " in column order " + join_ints(order),
                                {{"graph", graph_to_json(cls.representative.data())}, {"perimeters", rationals_to_json(p)}}});
        }
      }
    }
  }
}

void suite_p_independence(const SuiteOptions& o, Rng& rng, SuiteReport& r) {
  struct Q {
    int g;
    std::vector<int> d;
  };
  for (const Q& q : std::vector<Q>{{0, {0, 0, 0}}, {1, {1}}, {0, {1, 0, 0, 0}}, {1, {1, 1}}, {1, {2, 0}}}) {
    const int n = int(q.d.size());
    const auto classes = enumerate_trivalent(q.g, n);
    for (long t = 0; t < scaled(o.scale, 2); ++t) {
      ++r.cases;
      const RationalVector p1 = random_generic_perimeters(n, rng());
      const RationalVector p2 = random_generic_perimeters(n, rng());
      const Rational v1 = intersection_number({q.g, q.d, p1, o.jobs}, classes).value;
      const Rational v2 = intersection_number({q.g, q.d, p2, o.jobs}, classes).value;
      if (v1 != v2) {
        r.failures.push_back({"p-independence", to_string(v1) + " at one perimeter vector, " + to_string(v2) + " at another",
                              {{"genus", q.g}, {"d", q.d}, {"p1", rationals_to_json(p1)}, {"p2", rationals_to_json(p2)}}});
      }
      // Permuting d together with p.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> d2(n);
      RationalVector p3(n);
      for (int i = 0; i < n; ++i) {
        d2[perm[i]] = q.d[i];
        p3[perm[i]] = p1[i];
      }
      const Rational v3 = intersection_number({q.g, d2, p3, o.jobs}, classes).value;
      if (v3 != v1) {
        r.failures.push_back({"equivariance", "permuting the slots changed " + to_string(v1) + " to " + to_string(v3),
                              {{"genus", q.g}, {"d", d2}, {"p", rationals_to_json(p3)}}});
      }
    }
  }
}

Complex random_complex(Rng& rng) { return Complex(random_rational(rng, 20, 6), random_rational(rng, 20, 6)); }

PointConfig random_config(Rng& rng, int n) {
  PointConfig x;
  while (int(x.size()) < n) {
    const MarkedPoint p = chance(rng, 0.1) ? MarkedPoint::infinity() : MarkedPoint::at(random_complex(rng));
    if (std::find(x.begin(), x.end(), p) == x.end()) x.push_back(p);
  }
  return x;
}

Mobius random_mobius(Rng& rng) {
  for (;;) {
    Mobius m{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    if (!(m.a * m.d - m.b * m.c).is_zero()) return m;
  }
}

// (x1, x2; x3, x4) = (x1 - x3)(x2 - x4) / ((x1 - x4)(x2 - x3)) on CP^1, as a
// pair (num, den) so that infinity needs no special value.
std::pair<Complex, Complex> cross_ratio(const PointConfig& x) {
  // Homogeneous coordinates [z : 1] or [1 : 0].
  auto hom = [](const MarkedPoint& p) {
    return p.infinite ? std::pair<Complex, Complex>{Complex(1), Complex(0)} : std::pair<Complex, Complex>{p.value, Complex(1)};
  };
  auto det = [&](int a, int b) {
    const auto [za, wa] = hom(x[a]);
    const auto [zb, wb] = hom(x[b]);
    return za * wb - zb * wa;
  };
  return {det(0, 2) * det(1, 3), det(0, 3) * det(1, 2)};
}

Json config_json(const PointConfig& x) {
  Json out = Json::array();
  for (const auto& p : x) out.push_back(to_string(p));
  return out;
}

void suite_model0(const SuiteOptions& o, Rng& rng, SuiteReport& r) {
  for (long t = 0; t < scaled(o.scale, 100); ++t) {
    ++r.cases;
    const PointConfig x = random_config(rng, uniform(rng, 3, 7));
    const Mobius m = random_mobius(rng);
    PointConfig y;
    for (const auto& p : x) y.push_back(m.apply(p));
    const auto fx = full_map(x), fy = full_map(y);
    if (fx != fy) r.failures.push_back({"mobius", "full_map changed under a Mobius map", {{"points", config_json(x)}, {"image", config_json(y)}}});
    for (const auto& f : fx) {
      if (!f.coordinate_sum().is_zero()) r.failures.push_back({"coordinate-sum", "coordinates do not sum to zero", {{"points", config_json(x)}}});
    }
    // Relabeling permutes the F_i.
    std::vector<int> perm(x.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PointConfig z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[perm[i]] = x[i];
    const auto fz = full_map(z);
    for (size_t i = 0; i < x.size(); ++i) {
      ProjectivePoint expect;
      std::vector<std::pair<int, Complex>> slots;
      int c = 0;
      for (size_t j = 0; j < x.size(); ++j) {
        if (j == i) continue;
        slots.emplace_back(perm[j], fx[i].coords[c++]);
      }
      std::sort(slots.begin(), slots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& s : slots) expect.coords.push_back(s.second);
      if (!(fz[perm[i]] == expect)) {
        r.failures.push_back({"equivariance", "relabeling points does not permute the maps", {{"points", config_json(x)}}});
        break;
      }
    }
  }
  for (long t = 0; t < scaled(o.scale, 100); ++t) {
    ++r.cases;
    const PointConfig x = random_config(rng, 4);
    PointConfig y;
    if (chance(rng, 0.5)) {
      const Mobius m = random_mobius(rng);
      for (const auto& p : x) y.push_back(m.apply(p));
    } else {
      y = random_config(rng, 4);
    }
    const auto [nx, dx] = cross_ratio(x);
    const auto [ny, dy] = cross_ratio(y);
    const bool same_ratio = nx * dy == ny * dx;
    const bool same_map = full_map(x) == full_map(y);
    if (same_ratio != same_map) {
      r.failures.push_back({"separation", same_map ? "different cross-ratios, equal maps" : "equal cross-ratios, different maps",
                            {{"x", config_json(x)}, {"y", config_json(y)}}});
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"contraction", "stokes", "alpha", "omega", "p-independence", "model0", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport r;
  r.name = name;
  r.seed = options.seed;
  Rng rng(options.seed);
  const auto start = std::chrono::steady_clock::now();
  if (name == "contraction") {
    suite_contraction(options, rng, r);
  } else if (name == "stokes") {
    suite_stokes(options, rng, r);
  } else if (name == "alpha") {
    suite_alpha(options, rng, r);
  } else if (name == "omega") {
    suite_omega(options, rng, r);
  } else if (name == "p-independence") {
    suite_p_independence(options, rng, r);
  } else if (name == "model0") {
    suite_model0(options, rng, r);
  } else {
    throw Error("unknown suite \"" + name + "\"");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options) {
  if (name != "all") return {run_suite(name, options)};
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) {
    if (n != "all") out.push_back(run_suite(n, options));
  }
  return out;
}

Json report_to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"check", f.check}, {"message", f.message}, {"input", f.input}});
  return Json{{"suite", r.name}, {"seed", r.seed}, {"cases", r.cases}, {"ok", r.ok()},
              {"seconds", r.seconds}, {"failures", failures}};
}

}  // namespace kcell
