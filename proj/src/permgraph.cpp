#include "kcell/permgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kcell {

std::string to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "ok";
    case Violation::kMalformedHalfEdges: return "malformed half-edge set";
    case Violation::kNotBlockRespecting: return "sigma0 not block-respecting";
    case Violation::kNegativeDefect: return "negative genus defect";
    case Violation::kNoFaces: return "no faces";
    case Violation::kFaceLabelMismatch: return "face-label mismatch";
    case Violation::kDisconnected: return "disconnected graph";
    case Violation::kUnstable: return "stability violation";
  }
  return "unknown";
}

namespace {

struct Analysis {
  ValidationReport report;
  std::vector<int> sigma0, sigma0_inv, sigma2, vertex_of, cycle_of, face_of;
  std::vector<std::vector<int>> face_cycles;  // indexed by label-1
  int num_cycles = 0;
};

ValidationReport fail(Violation v, std::string msg) { return {v, std::move(msg)}; }

Analysis analyze(const RibbonGraphData& data) {
  Analysis a;
  const int H = data.half_edges;
  if (H < 0 || H % 2 != 0) {
    a.report = fail(Violation::kMalformedHalfEdges,
                    "half_edges must be even and non-negative, got " + std::to_string(H));
    return a;
  }
  a.sigma0.assign(H, -1);
  a.vertex_of.assign(H, -1);
  a.cycle_of.assign(H, -1);
  for (size_t v = 0; v < data.vertices.size(); ++v) {
    const VertexData& vd = data.vertices[v];
    if (vd.defect < 0) {
      a.report = fail(Violation::kNegativeDefect, "vertex " + std::to_string(v));
      return a;
    }
    for (const auto& cyc : vd.cycles) {
      if (cyc.empty()) {
        a.report = fail(Violation::kNotBlockRespecting, "empty cycle at vertex " + std::to_string(v));
        return a;
      }
      for (size_t j = 0; j < cyc.size(); ++j) {
        const int h = cyc[j];
        if (h < 0 || h >= H) {
          a.report = fail(Violation::kMalformedHalfEdges, "half-edge " + std::to_string(h) + " out of range");
          return a;
        }
        if (a.sigma0[h] != -1) {
          a.report = fail(Violation::kNotBlockRespecting,
                          "half-edge " + std::to_string(h) + " appears in more than one vertex cycle");
          return a;
        }
        a.sigma0[h] = cyc[(j + 1) % cyc.size()];
        a.vertex_of[h] = int(v);
        a.cycle_of[h] = a.num_cycles;
      }
      ++a.num_cycles;
    }
  }
  for (int h = 0; h < H; ++h) {
    if (a.sigma0[h] == -1) {
      a.report = fail(Violation::kNotBlockRespecting, "half-edge " + std::to_string(h) + " belongs to no vertex");
      return a;
    }
  }
  a.sigma0_inv.assign(H, -1);
  for (int h = 0; h < H; ++h) a.sigma0_inv[a.sigma0[h]] = h;
  a.sigma2.assign(H, -1);
  for (int h = 0; h < H; ++h) a.sigma2[h] = a.sigma0_inv[h ^ 1];

  // Faces and their labels.
  a.face_of.assign(H, 0);
  std::vector<int> cycle_id(H, -1);
  std::vector<std::vector<int>> cycles;
  for (int h = 0; h < H; ++h) {
    if (cycle_id[h] != -1) continue;
    std::vector<int> cyc;
    for (int x = h; cycle_id[x] == -1; x = a.sigma2[x]) {
      cycle_id[x] = int(cycles.size());
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }
  if (cycles.empty()) {
    a.report = fail(Violation::kNoFaces, "a graph needs at least one numbered face");
    return a;
  }
  const int n = int(cycles.size());
  std::vector<int> label_of_cycle(n, 0);
  for (const auto& [rep, label] : data.face_labels) {
    if (rep < 0 || rep >= H) {
      a.report = fail(Violation::kFaceLabelMismatch, "representative " + std::to_string(rep) + " out of range");
      return a;
    }
    const int c = cycle_id[rep];
    if (label_of_cycle[c] != 0) {
      a.report = fail(Violation::kFaceLabelMismatch, "face containing " + std::to_string(rep) + " labeled twice");
      return a;
    }
    label_of_cycle[c] = label;
  }
  std::vector<bool> seen(n + 1, false);
  for (int c = 0; c < n; ++c) {
    const int label = label_of_cycle[c];
    if (label < 1 || label > n || seen[label]) {
      a.report = fail(Violation::kFaceLabelMismatch,
                      "face labels must be a bijection onto 1.." + std::to_string(n));
      return a;
    }
    seen[label] = true;
  }
  a.face_cycles.assign(n, {});
  for (int c = 0; c < n; ++c) {
    for (int h : cycles[c]) a.face_of[h] = label_of_cycle[c];
    a.face_cycles[label_of_cycle[c] - 1] = cycles[c];
  }

  // Connectivity of the underlying graph (vertices joined by edges).
  const int V = int(data.vertices.size());
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < H / 2; ++e) parent[find(a.vertex_of[2 * e])] = find(a.vertex_of[2 * e + 1]);
  for (int v = 1; v < V; ++v) {
    if (find(v) != find(0)) {
      a.report = fail(Violation::kDisconnected, "vertex " + std::to_string(v) + " unreachable from vertex 0");
      return a;
    }
  }
  return a;
}

ValidationReport stability_report(const RibbonGraphData& data) {
  for (size_t v = 0; v < data.vertices.size(); ++v) {
    const VertexData& vd = data.vertices[v];
    size_t degree = 0;
    for (const auto& c : vd.cycles) degree += c.size();
    const bool univalent = degree == 1;
    const bool transposition = degree == 2 && vd.cycles.size() == 1;
    if ((univalent || transposition) && vd.defect == 0) {
      return fail(Violation::kUnstable, "vertex " + std::to_string(v) +
                                            (univalent ? " of degree 1" : " of degree 2 with a transposition") +
                                            " has genus defect 0");
    }
  }
  return {};
}

}  // namespace

ValidationReport validate(const RibbonGraphData& data) {
  Analysis a = analyze(data);
  if (!a.report.ok()) return a.report;
  return stability_report(data);
}

StableRibbonGraph::StableRibbonGraph(RibbonGraphData data) : data_(std::move(data)) {
  Analysis a = analyze(data_);
  if (!a.report.ok()) throw InvalidGraph(a.report);
  sigma0_ = std::move(a.sigma0);
  sigma0_inv_ = std::move(a.sigma0_inv);
  sigma2_ = std::move(a.sigma2);
  vertex_of_ = std::move(a.vertex_of);
  cycle_of_ = std::move(a.cycle_of);
  face_of_ = std::move(a.face_of);
  num_cycles_ = a.num_cycles;
  num_faces_ = int(a.face_cycles.size());
  for (int label = 1; label <= num_faces_; ++label) {
    FaceWord w;
    w.label = label;
    const auto& cyc = a.face_cycles[label - 1];
    const auto start = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
    for (size_t j = 0; j < cyc.size(); ++j) {
      const int h = cyc[(start + j) % cyc.size()];
      w.half_edges.push_back(h);
      w.edges.push_back(h / 2);
    }
    faces_.push_back(std::move(w));
  }
}

int StableRibbonGraph::degree(int v) const {
  int d = 0;
  for (const auto& c : data_.vertices[v].cycles) d += int(c.size());
  return d;
}

std::vector<FaceWord> StableRibbonGraph::faces() const { return faces_; }

bool StableRibbonGraph::is_ordinary() const {
  for (const auto& v : data_.vertices) {
    if (v.cycles.size() != 1 || v.defect != 0) return false;
  }
  return true;
}

bool StableRibbonGraph::is_trivalent() const {
  if (!is_ordinary()) return false;
  for (int v = 0; v < num_vertices(); ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

bool StableRibbonGraph::is_stable() const { return stability_report(data_).ok(); }

RibbonGraphData StableRibbonGraph::normalized_data() const {
  RibbonGraphData out = data_;
  out.face_labels.clear();
  for (const auto& f : faces_) out.face_labels[f.half_edges.front()] = f.label;
  return out;
}

int genus(const StableRibbonGraph& g) {
  int defects = 0;
  for (const auto& v : g.vertices()) defects += v.defect;
  const int twice = g.num_vertex_cycles() + g.num_edges() - g.num_faces();
  return 1 + twice / 2 - g.num_vertices() + defects;
}

RationalVector perimeters(const StableRibbonGraph& g, const RationalVector& lengths) {
  if (int(lengths.size()) != g.num_edges()) {
    throw Error("expected " + std::to_string(g.num_edges()) + " edge lengths, got " +
                std::to_string(lengths.size()));
  }
  for (size_t e = 0; e < lengths.size(); ++e) {
    if (lengths[e] <= 0) throw Error("edge " + std::to_string(e) + " has non-positive length");
  }
  RationalVector p(g.num_faces());
  for (int label = 1; label <= g.num_faces(); ++label) {
    for (int e : g.face(label).edges) p[label - 1] += lengths[e];
  }
  return p;
}

std::vector<std::vector<int>> face_edge_incidence(const StableRibbonGraph& g) {
  std::vector<std::vector<int>> m(g.num_faces(), std::vector<int>(g.num_edges(), 0));
  for (int label = 1; label <= g.num_faces(); ++label) {
    for (int e : g.face(label).edges) ++m[label - 1][e];
  }
  return m;
}

StableRibbonGraph relabel(const StableRibbonGraph& g, const std::vector<int>& edge_perm,
                          const std::vector<bool>& flip) {
  const int E = g.num_edges();
  if (int(edge_perm.size()) != E || int(flip.size()) != E) throw Error("relabel: size mismatch");
  auto map_h = [&](int h) {
    const int e = h / 2;
    const int side = (h & 1) ^ (flip[e] ? 1 : 0);
    return 2 * edge_perm[e] + side;
  };
  RibbonGraphData out;
  out.half_edges = g.num_half_edges();
  for (const auto& v : g.vertices()) {
    VertexData nv;
    nv.defect = v.defect;
    for (const auto& c : v.cycles) {
      std::vector<int> nc;
      for (int h : c) nc.push_back(map_h(h));
      nv.cycles.push_back(std::move(nc));
    }
    out.vertices.push_back(std::move(nv));
  }
  for (const auto& [rep, label] : g.data().face_labels) out.face_labels[map_h(rep)] = label;
  return StableRibbonGraph(std::move(out));
}

}  // namespace kcell
