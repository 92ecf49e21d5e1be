#include "kcell/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>

#include "kcell/stable.hpp"

namespace kcell {

std::string CanonicalKey::hex() const {
  std::string out;
  char buf[16];
  for (int c : code_) {
    std::snprintf(buf, sizeof(buf), "%02x", c & 0xff);
    out += buf;
  }
  return out;
}

namespace {

// Enumerates labelings of the half-edges by a breadth-first traversal rooted
// at every half-edge. After the sigma0/sigma1 orbit of the visited set is
// exhausted, the traversal branches over the unvisited half-edges of the
// first visited vertex that has any. The set of labelings produced is
// invariant under isomorphism, so the minimum code is canonical.
class LabelingSearch {
 public:
  LabelingSearch(const StableRibbonGraph& g, bool with_labels) : g_(g), with_labels_(with_labels) {}

  void run() {
    const int H = g_.num_half_edges();
    if (H == 0) {
      record(std::vector<int>{});
      return;
    }
    for (int root = 0; root < H; ++root) {
      std::vector<int> order{root};
      std::vector<int> pos(H, -1);
      pos[root] = 0;
      explore(order, pos, 0);
    }
  }

  const std::vector<int>& best_code() const { return best_; }
  const std::vector<std::vector<int>>& best_orders() const { return best_orders_; }

 private:
  void explore(std::vector<int>& order, std::vector<int>& pos, size_t i) {
    const int H = g_.num_half_edges();
    for (; i < order.size(); ++i) {
      const int x = order[i];
      for (int y : {x ^ 1, g_.sigma0(x)}) {
        if (pos[y] < 0) {
          pos[y] = int(order.size());
          order.push_back(y);
        }
      }
    }
    if (int(order.size()) == H) {
      record(order);
      return;
    }
    // Branch at the first touched vertex (in label order) that still has
    // unvisited half-edges; that choice depends only on the labeling so far.
    int vertex = -1;
    for (int h : order) {
      const int v = g_.vertex_of(h);
      for (const auto& c : g_.vertices()[v].cycles) {
        for (int y : c) {
          if (pos[y] < 0) vertex = v;
        }
      }
      if (vertex >= 0) break;
    }
    for (int y = 0; y < H; ++y) {
      if (pos[y] >= 0 || g_.vertex_of(y) != vertex) continue;
      std::vector<int> order2 = order;
      std::vector<int> pos2 = pos;
      pos2[y] = int(order2.size());
      order2.push_back(y);
      explore(order2, pos2, i);
    }
  }

  std::vector<int> code_of(const std::vector<int>& order) const {
    const int H = g_.num_half_edges();
    std::vector<int> pos(H);
    for (int a = 0; a < H; ++a) pos[order[a]] = a;
    std::vector<int> vorder(g_.num_vertices(), -1);
    int nv = 0;
    for (int h : order) {
      if (vorder[g_.vertex_of(h)] < 0) vorder[g_.vertex_of(h)] = nv++;
    }
    // Vertices without half-edges only occur in the edgeless graph.
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (vorder[v] < 0) vorder[v] = nv++;
    }
    std::vector<int> code{H, g_.num_vertices(), g_.num_faces()};
    code.reserve(3 + 4 * H + g_.num_vertices());
    for (int h : order) {
      code.push_back(pos[g_.sigma0(h)]);
      code.push_back(pos[h ^ 1]);
      code.push_back(vorder[g_.vertex_of(h)]);
      code.push_back(with_labels_ ? g_.face_of(h) : 0);
    }
    std::vector<int> defects(g_.num_vertices());
    for (int v = 0; v < g_.num_vertices(); ++v) defects[vorder[v]] = g_.defect(v);
    code.insert(code.end(), defects.begin(), defects.end());
    return code;
  }

  void record(const std::vector<int>& order) {
    std::vector<int> code = code_of(order);
    if (best_orders_.empty() || code < best_) {
      best_ = std::move(code);
      best_orders_.assign(1, order);
    } else if (code == best_) {
      best_orders_.push_back(order);
    }
  }

  const StableRibbonGraph& g_;
  bool with_labels_;
  std::vector<int> best_;
  std::vector<std::vector<int>> best_orders_;
};

HalfEdgePermutation positions(const std::vector<int>& order) {
  HalfEdgePermutation pos(order.size());
  for (size_t a = 0; a < order.size(); ++a) pos[order[a]] = int(a);
  return pos;
}

StableRibbonGraph rebuild_from_order(const StableRibbonGraph& g, const std::vector<int>& order) {
  const int H = g.num_half_edges();
  std::vector<int> relabel(H, -1);
  int next_edge = 0;
  for (int h : order) {
    if (relabel[h] >= 0) continue;
    relabel[h] = 2 * next_edge;
    relabel[h ^ 1] = 2 * next_edge + 1;
    ++next_edge;
  }
  std::vector<int> vorder(g.num_vertices(), -1);
  std::vector<int> vertex_by_rank;
  for (int h : order) {
    if (vorder[g.vertex_of(h)] < 0) {
      vorder[g.vertex_of(h)] = int(vertex_by_rank.size());
      vertex_by_rank.push_back(g.vertex_of(h));
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (vorder[v] < 0) {
      vorder[v] = int(vertex_by_rank.size());
      vertex_by_rank.push_back(v);
    }
  }
  RibbonGraphData out;
  out.half_edges = H;
  for (int v : vertex_by_rank) {
    VertexData vd;
    vd.defect = g.defect(v);
    for (const auto& c : g.vertices()[v].cycles) {
      std::vector<int> nc;
      for (int h : c) nc.push_back(relabel[h]);
      std::rotate(nc.begin(), std::min_element(nc.begin(), nc.end()), nc.end());
      vd.cycles.push_back(std::move(nc));
    }
    std::sort(vd.cycles.begin(), vd.cycles.end());
    out.vertices.push_back(std::move(vd));
  }
  for (const auto& f : g.faces()) {
    int best = H;
    for (int h : f.half_edges) best = std::min(best, relabel[h]);
    out.face_labels[best] = f.label;
  }
  return StableRibbonGraph(std::move(out));
}

HalfEdgePermutation compose_inverse_first(const HalfEdgePermutation& base, const HalfEdgePermutation& other) {
  // h -> base^-1(other(h))
  HalfEdgePermutation inv(base.size());
  for (size_t h = 0; h < base.size(); ++h) inv[base[h]] = int(h);
  HalfEdgePermutation out(base.size());
  for (size_t h = 0; h < base.size(); ++h) out[h] = inv[other[h]];
  return out;
}

HalfEdgePermutation compose(const HalfEdgePermutation& a, const HalfEdgePermutation& b) {
  // h -> a(b(h))
  HalfEdgePermutation out(b.size());
  for (size_t h = 0; h < b.size(); ++h) out[h] = a[b[h]];
  return out;
}

}  // namespace

CanonicalForm canonical_form(const StableRibbonGraph& g) {
  LabelingSearch search(g, true);
  search.run();
  return {CanonicalKey(search.best_code()), positions(search.best_orders().front())};
}

CanonicalKey canonical_key(const StableRibbonGraph& g) { return canonical_form(g).key; }

StableRibbonGraph canonical_representative(const StableRibbonGraph& g) {
  LabelingSearch search(g, true);
  search.run();
  return rebuild_from_order(g, search.best_orders().front());
}

AutomorphismGroup automorphisms(const StableRibbonGraph& g) {
  LabelingSearch search(g, true);
  search.run();
  const auto& orders = search.best_orders();
  const HalfEdgePermutation base = positions(orders.front());
  AutomorphismGroup group;
  group.order = long(orders.size());
  for (const auto& o : orders) group.elements.push_back(compose_inverse_first(base, positions(o)));
  std::sort(group.elements.begin(), group.elements.end());  // identity sorts first

  // Greedy generating set: add an element whenever it is not yet generated.
  std::vector<HalfEdgePermutation> generated{group.elements.front()};
  auto in_generated = [&](const HalfEdgePermutation& p) {
    return std::find(generated.begin(), generated.end(), p) != generated.end();
  };
  for (const auto& el : group.elements) {
    if (in_generated(el)) continue;
    group.generators.push_back(el);
    for (size_t i = 0; i < generated.size(); ++i) {
      for (const auto& gen : group.generators) {
        HalfEdgePermutation p = compose(gen, generated[i]);
        if (!in_generated(p)) generated.push_back(std::move(p));
      }
    }
  }
  return group;
}

bool is_isomorphism(const StableRibbonGraph& a, const StableRibbonGraph& b, const HalfEdgePermutation& perm) {
  const int H = a.num_half_edges();
  if (b.num_half_edges() != H || int(perm.size()) != H) return false;
  if (a.num_vertices() != b.num_vertices() || a.num_faces() != b.num_faces()) return false;
  std::vector<bool> hit(H, false);
  for (int h : perm) {
    if (h < 0 || h >= H || hit[h]) return false;
    hit[h] = true;
  }
  std::vector<int> vmap(a.num_vertices(), -1);
  for (int h = 0; h < H; ++h) {
    if (perm[h ^ 1] != (perm[h] ^ 1)) return false;
    if (perm[a.sigma0(h)] != b.sigma0(perm[h])) return false;
    if (a.face_of(h) != b.face_of(perm[h])) return false;
    const int va = a.vertex_of(h), vb = b.vertex_of(perm[h]);
    if (vmap[va] < 0) vmap[va] = vb;
    if (vmap[va] != vb || a.defect(va) != b.defect(vb)) return false;
  }
  std::vector<bool> vhit(b.num_vertices(), false);
  for (int vb : vmap) {
    if (vb < 0 || vhit[vb]) return false;
    vhit[vb] = true;
  }
  return true;
}

std::optional<HalfEdgePermutation> find_isomorphism(const StableRibbonGraph& a, const StableRibbonGraph& b) {
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (fa.key != fb.key) return std::nullopt;
  return compose_inverse_first(fb.labeling, fa.labeling);
}

int top_cell_edges(int genus, int faces) {
  if (genus < 0 || faces < 1 || 2 - 2 * genus - faces >= 0) {
    throw Error("unstable (g, n) = (" + std::to_string(genus) + ", " + std::to_string(faces) + ")");
  }
  const int E = 6 * genus - 6 + 3 * faces;
  if (E > kMaxEnumerationEdges) {
    throw Error("(g, n) = (" + std::to_string(genus) + ", " + std::to_string(faces) + ") needs " +
                std::to_string(E) + " edges; the exhaustive enumerator is limited to " +
                std::to_string(kMaxEnumerationEdges));
  }
  return E;
}

namespace {

// Generates every connected trivalent map on 2E half-edges at least once, as
// the labeling produced by a traversal from half-edge 0 that labels sigma1(x)
// and then sigma0(x) for each x in label order.
class TrivalentGenerator {
 public:
  explicit TrivalentGenerator(int half_edges) : H_(half_edges), s0_(H_, -1), s0inv_(H_, -1), s1_(H_, -1) {}

  void run(const std::function<void(const std::vector<int>&, const std::vector<int>&)>& emit) {
    emit_ = &emit;
    count_ = 1;
    step(0);
  }

 private:
  void step(int i) {
    if (i == count_) {
      if (count_ == H_) (*emit_)(s0_, s1_);
      return;
    }
    const int x = i;
    if (s1_[x] >= 0) {
      place_sigma0(i);
      return;
    }
    // sigma1(x) is either a fresh label or a discovered half-edge not yet paired.
    if (count_ < H_) {
      pair(x, count_++);
      place_sigma0(i);
      unpair(x);
      --count_;
    }
    for (int y = x + 1; y < count_; ++y) {
      if (s1_[y] >= 0) continue;
      pair(x, y);
      place_sigma0(i);
      unpair(x);
    }
  }

  void place_sigma0(int i) {
    const int x = i;
    if (s0_[x] >= 0) {
      step(i + 1);
      return;
    }
    if (count_ < H_) {
      const int y = count_++;
      try_link(x, y, i);
      --count_;
    }
    for (int y = 0; y < count_; ++y) {
      if (y != x && s0inv_[y] < 0) try_link(x, y, i);
    }
  }

  void pair(int a, int b) {
    s1_[a] = b;
    s1_[b] = a;
  }
  void unpair(int a) {
    s1_[s1_[a]] = -1;
    s1_[a] = -1;
  }

  void link(int a, int b) {
    s0_[a] = b;
    s0inv_[b] = a;
  }
  void unlink(int a) {
    s0inv_[s0_[a]] = -1;
    s0_[a] = -1;
  }

  void try_link(int x, int y, int i) {
    link(x, y);
    // Walk forward from y; a cycle through x must have length exactly 3.
    int steps = 1, z = y;
    bool cycle = false;
    while (s0_[z] >= 0 && steps <= 3) {
      z = s0_[z];
      ++steps;
      if (z == y) {
        cycle = true;
        break;
      }
    }
    if (cycle) {
      if (steps - 1 == 3) step(i + 1);
      unlink(x);
      return;
    }
    int head = x, back = 0;
    while (s0inv_[head] >= 0 && back <= 3) {
      head = s0inv_[head];
      ++back;
    }
    const int length = steps + back + 1;  // nodes from head to z
    if (length < 3) {
      step(i + 1);
    } else if (length == 3) {
      link(z, head);
      step(i + 1);
      unlink(z);
    }
    unlink(x);
  }

  int H_;
  std::vector<int> s0_, s0inv_, s1_;
  int count_ = 0;
  const std::function<void(const std::vector<int>&, const std::vector<int>&)>* emit_ = nullptr;
};

RibbonGraphData data_from_perms(const std::vector<int>& s0, const std::vector<int>& s1) {
  const int H = int(s0.size());
  std::vector<int> relabel(H, -1);
  int next = 0;
  for (int h = 0; h < H; ++h) {
    if (relabel[h] >= 0) continue;
    relabel[h] = 2 * next;
    relabel[s1[h]] = 2 * next + 1;
    ++next;
  }
  RibbonGraphData data;
  data.half_edges = H;
  std::vector<bool> seen(H, false);
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    std::vector<int> cyc;
    for (int x = h; !seen[x]; x = s0[x]) {
      seen[x] = true;
      cyc.push_back(relabel[x]);
    }
    data.vertices.push_back(VertexData{{std::move(cyc)}, 0});
  }
  return data;
}

// Labels faces 1..n in order of their smallest half-edge.
void label_faces_by_min(RibbonGraphData& data) {
  const int H = data.half_edges;
  std::vector<int> s0(H), s0inv(H);
  for (const auto& v : data.vertices)
    for (const auto& c : v.cycles)
      for (size_t j = 0; j < c.size(); ++j) s0[c[j]] = c[(j + 1) % c.size()];
  for (int h = 0; h < H; ++h) s0inv[s0[h]] = h;
  std::vector<bool> seen(H, false);
  int label = 0;
  data.face_labels.clear();
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    data.face_labels[h] = ++label;
    for (int x = h; !seen[x]; x = s0inv[x ^ 1]) seen[x] = true;
  }
}

}  // namespace

std::vector<GraphClass> enumerate_trivalent(int genus_value, int faces) {
  const int E = top_cell_edges(genus_value, faces);
  const int H = 2 * E;
  const int V = 2 * E / 3;

  std::map<CanonicalKey, StableRibbonGraph> unlabeled;
  TrivalentGenerator gen(H);
  gen.run([&](const std::vector<int>& s0, const std::vector<int>& s1) {
    RibbonGraphData data = data_from_perms(s0, s1);
    if (int(data.vertices.size()) != V) return;
    label_faces_by_min(data);
    if (int(data.face_labels.size()) != faces) return;
    StableRibbonGraph g(std::move(data));
    if (genus(g) != genus_value) return;
    LabelingSearch search(g, false);
    search.run();
    unlabeled.emplace(CanonicalKey(search.best_code()), std::move(g));
  });

  std::map<CanonicalKey, GraphClass> classes;
  for (const auto& [ukey, g] : unlabeled) {
    std::vector<int> perm(faces);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      RibbonGraphData d = g.data();
      for (auto& [rep, label] : d.face_labels) label = perm[label - 1];
      StableRibbonGraph labeled(std::move(d));
      CanonicalKey key = canonical_key(labeled);
      if (classes.count(key)) continue;
      StableRibbonGraph rep = canonical_representative(labeled);
      const long aut = automorphisms(rep).order;
      classes.emplace(key, GraphClass{key, std::move(rep), aut});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<GraphClass> out;
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

std::vector<CellClass> enumerate_cells(int genus_value, int faces) {
  std::vector<CellClass> cells;
  std::map<CanonicalKey, int> index;
  for (auto& c : enumerate_trivalent(genus_value, faces)) {
    index.emplace(c.key, int(cells.size()));
    const int dim = c.representative.num_edges();
    cells.push_back(CellClass{std::move(c), dim, {}, {}});
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    const StableRibbonGraph g = cells[i].graph.representative;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!is_contractible(g, {e})) continue;
      StableRibbonGraph h = contract_edge(g, e);
      if (!h.is_stable()) throw Error("edge contraction produced an unstable graph");
      CanonicalKey key = canonical_key(h);
      auto it = index.find(key);
      int j;
      if (it == index.end()) {
        j = int(cells.size());
        index.emplace(key, j);
        StableRibbonGraph rep = canonical_representative(h);
        const long aut = automorphisms(rep).order;
        const int dim = rep.num_edges();
        cells.push_back(CellClass{GraphClass{key, std::move(rep), aut}, dim, {}, {}});
      } else {
        j = it->second;
      }
      cells[i].boundary.emplace_back(e, j);
    }
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    for (const auto& [e, j] : cells[i].boundary) cells[j].parents.push_back(int(i));
  }

  // Deterministic order: decreasing dimension, then key.
  std::vector<int> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cells[a].dimension != cells[b].dimension) return cells[a].dimension > cells[b].dimension;
    return cells[a].graph.key < cells[b].graph.key;
  });
  std::vector<int> new_index(cells.size());
  for (size_t r = 0; r < order.size(); ++r) new_index[order[r]] = int(r);
  std::vector<CellClass> sorted;
  for (int old : order) {
    CellClass c = cells[old];
    for (auto& [e, j] : c.boundary) j = new_index[j];
    for (int& p : c.parents) p = new_index[p];
    std::sort(c.parents.begin(), c.parents.end());
    c.parents.erase(std::unique(c.parents.begin(), c.parents.end()), c.parents.end());
    sorted.push_back(std::move(c));
  }
  return sorted;
}

}  // namespace kcell
