#include "kcell/stable.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kcell {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Splits `members` (half-edges of one new vertex, in old numbering) into the
// cycles of `sigma0`, each starting at its smallest element, ordered by that
// element.
std::vector<std::vector<int>> cycles_within(std::vector<int> members, const std::vector<int>& sigma0,
                                            const std::vector<int>& renumber) {
  std::sort(members.begin(), members.end());
  std::set<int> pending(members.begin(), members.end());
  std::vector<std::vector<int>> out;
  for (int h : members) {
    if (!pending.count(h)) continue;
    std::vector<int> cyc;
    int x = h;
    do {
      if (!pending.erase(x)) throw Error("contraction produced a sigma0 that does not respect vertex blocks");
      cyc.push_back(renumber[x]);
      x = sigma0[x];
    } while (x != h);
    out.push_back(std::move(cyc));
  }
  return out;
}

// Shared tail of both contraction routines: `keep[e]` marks surviving edges,
// `group_of[v]` the new vertex index of each old vertex and `defects` the
// defect of each new vertex.
Contraction rebuild(const StableRibbonGraph& g, const std::vector<bool>& keep, const std::vector<int>& group_of,
                    const std::vector<int>& defects) {
  const int H = g.num_half_edges();
  const int E = g.num_edges();
  std::vector<int> edge_map(E, -1);
  int next = 0;
  for (int e = 0; e < E; ++e) {
    if (keep[e]) edge_map[e] = next++;
  }
  std::vector<int> renumber(H, -1);
  for (int h = 0; h < H; ++h) {
    if (keep[h / 2]) renumber[h] = 2 * edge_map[h / 2] + (h & 1);
  }

  // sigma2' by first return, then sigma0' = sigma1' sigma2'^-1.
  std::vector<int> s2(H, -1), s2_inv(H, -1), s0(H, -1);
  for (int h = 0; h < H; ++h) {
    if (!keep[h / 2]) continue;
    int x = g.sigma2(h);
    while (!keep[x / 2]) x = g.sigma2(x);
    s2[h] = x;
    s2_inv[x] = h;
  }
  for (int h = 0; h < H; ++h) {
    if (keep[h / 2]) s0[h] = s2_inv[h] ^ 1;
  }

  const int new_vertices = int(defects.size());
  std::vector<std::vector<int>> members(new_vertices);
  for (int h = 0; h < H; ++h) {
    if (keep[h / 2]) members[group_of[g.vertex_of(h)]].push_back(h);
  }
  RibbonGraphData out;
  out.half_edges = 2 * next;
  for (int v = 0; v < new_vertices; ++v) {
    VertexData vd;
    vd.defect = defects[v];
    vd.cycles = cycles_within(members[v], s0, renumber);
    out.vertices.push_back(std::move(vd));
  }
  for (int label = 1; label <= g.num_faces(); ++label) {
    for (int h : g.face(label).half_edges) {
      if (keep[h / 2]) {
        out.face_labels[renumber[h]] = label;
        break;
      }
    }
  }
  return {StableRibbonGraph(std::move(out)), std::move(edge_map)};
}

}  // namespace

bool is_contractible(const StableRibbonGraph& g, const std::vector<int>& edges) {
  std::vector<bool> in(g.num_edges(), false);
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    in[e] = true;
  }
  for (int label = 1; label <= g.num_faces(); ++label) {
    const auto& w = g.face(label).edges;
    if (std::all_of(w.begin(), w.end(), [&](int e) { return in[e]; })) return false;
  }
  return true;
}

ContractionPlan make_plan(const StableRibbonGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) throw Error("edge " + std::to_string(e) + " out of range");
  }
  std::vector<bool> in(g.num_edges(), false);
  for (int e : edges) in[e] = true;
  for (int label = 1; label <= g.num_faces(); ++label) {
    const auto& w = g.face(label).edges;
    if (std::all_of(w.begin(), w.end(), [&](int e) { return in[e]; })) {
      throw Error("face " + std::to_string(label) + " would lose all of its edges; it cannot be contracted");
    }
  }
  ContractionPlan plan;
  plan.edges = edges;
  DisjointSets ds(g.num_vertices());
  for (int e : edges) ds.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1));
  std::vector<int> comp_of_root(g.num_vertices(), -1);
  for (int e : edges) {
    const int r = ds.find(g.vertex_of(2 * e));
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = int(plan.components.size());
      plan.components.emplace_back();
    }
    plan.components[comp_of_root[r]].push_back(e);
  }
  return plan;
}

Contraction contract_edge_mapped(const StableRibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw Error("edge " + std::to_string(e) + " out of range");
  make_plan(g, {e});
  const int u = g.vertex_of(2 * e);
  const int w = g.vertex_of(2 * e + 1);
  std::vector<bool> keep(g.num_edges(), true);
  keep[e] = false;

  std::vector<int> group_of(g.num_vertices());
  std::vector<int> defects;
  const int merged = std::min(u, w);
  const int removed = std::max(u, w);
  for (int v = 0, next = 0; v < g.num_vertices(); ++v) {
    if (v == removed && removed != merged) {
      group_of[v] = group_of[merged];
      continue;
    }
    group_of[v] = next++;
    defects.push_back(g.defect(v));
  }
  int& d = defects[group_of[merged]];
  if (u != w) {
    d = g.defect(u) + g.defect(w);
  } else if (g.cycle_of(2 * e) != g.cycle_of(2 * e + 1)) {
    d = g.defect(u) + 1;
  }
  return rebuild(g, keep, group_of, defects);
}

StableRibbonGraph contract_edge(const StableRibbonGraph& g, int e) { return contract_edge_mapped(g, e).graph; }

StableRibbonGraph induced_component_graph(const StableRibbonGraph& g, const std::vector<int>& edges_in) {
  std::vector<int> edges = edges_in;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) throw Error("induced graph of an empty edge set");
  std::vector<int> local(g.num_edges(), -1);
  for (size_t i = 0; i < edges.size(); ++i) {
    const int e = edges[i];
    if (e < 0 || e >= g.num_edges()) throw Error("edge " + std::to_string(e) + " out of range");
    local[e] = int(i);
  }
  auto inside = [&](int h) { return local[h / 2] >= 0; };
  auto renum = [&](int h) { return 2 * local[h / 2] + (h & 1); };

  RibbonGraphData out;
  out.half_edges = 2 * int(edges.size());
  std::vector<int> s0(out.half_edges, -1);
  for (int e : edges) {
    for (int h : {2 * e, 2 * e + 1}) {
      int x = g.sigma0(h);
      while (!inside(x)) x = g.sigma0(x);
      s0[renum(h)] = renum(x);
    }
  }
  std::vector<int> vertex_index(g.num_vertices(), -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const auto& c : g.vertices()[v].cycles) {
      for (int h : c) {
        if (!inside(h)) continue;
        if (vertex_index[v] < 0) {
          vertex_index[v] = int(members.size());
          members.emplace_back();
          out.vertices.push_back(VertexData{{}, g.defect(v)});
        }
        members[vertex_index[v]].push_back(renum(h));
      }
    }
  }
  std::vector<int> identity(out.half_edges);
  std::iota(identity.begin(), identity.end(), 0);
  for (size_t v = 0; v < members.size(); ++v) out.vertices[v].cycles = cycles_within(members[v], s0, identity);

  // Faces of the induced structure, labeled by smallest half-edge.
  std::vector<int> s0_inv(out.half_edges);
  for (int h = 0; h < out.half_edges; ++h) s0_inv[s0[h]] = h;
  std::vector<bool> seen(out.half_edges, false);
  int label = 0;
  for (int h = 0; h < out.half_edges; ++h) {
    if (seen[h]) continue;
    out.face_labels[h] = ++label;
    for (int x = h; !seen[x]; x = s0_inv[x ^ 1]) seen[x] = true;
  }
  try {
    return StableRibbonGraph(std::move(out));
  } catch (const InvalidGraph& err) {
    throw Error(std::string("induced component graph: ") + err.what());
  }
}

Contraction contract_set_mapped(const StableRibbonGraph& g, const std::vector<int>& edges) {
  const ContractionPlan plan = make_plan(g, edges);
  std::vector<bool> keep(g.num_edges(), true);
  for (int e : plan.edges) keep[e] = false;

  DisjointSets ds(g.num_vertices());
  for (int e : plan.edges) ds.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1));
  std::vector<int> group_of(g.num_vertices(), -1);
  std::vector<int> root_group(g.num_vertices(), -1);
  std::vector<int> defects;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int r = ds.find(v);
    if (root_group[r] < 0) {
      root_group[r] = int(defects.size());
      defects.push_back(g.defect(v));
    }
    group_of[v] = root_group[r];
  }
  for (const auto& comp : plan.components) {
    const int v = group_of[g.vertex_of(2 * comp.front())];
    defects[v] = genus(induced_component_graph(g, comp));
  }
  return rebuild(g, keep, group_of, defects);
}

StableRibbonGraph contract_set(const StableRibbonGraph& g, const std::vector<int>& edges) {
  return contract_set_mapped(g, edges).graph;
}

}  // namespace kcell
