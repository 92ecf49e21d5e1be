#pragma once

// Stable ribbon graphs stored as permutation data on half-edges.
//
// Half-edges 2k and 2k+1 are the two halves of edge k, so sigma1 is never
// stored. Each vertex owns a block of half-edges and a permutation of that
// block given as explicit cycles; an ordinary ribbon graph has one cycle per
// vertex. Faces are the cycles of sigma2 = sigma0^-1 sigma1 and carry labels
// 1..n.

#include <map>
#include <string>
#include <vector>

#include "kcell/rational.hpp"

namespace kcell {

struct VertexData {
  std::vector<std::vector<int>> cycles;
  int defect = 0;

  bool operator==(const VertexData&) const = default;
};

/// Raw, unchecked description of a stable ribbon graph (the JSON schema).
struct RibbonGraphData {
  int half_edges = 0;
  std::vector<VertexData> vertices;
  /// representative half-edge -> face label
  std::map<int, int> face_labels;

  bool operator==(const RibbonGraphData&) const = default;
};

enum class Violation {
  kNone,
  kMalformedHalfEdges,
  kNotBlockRespecting,
  kNegativeDefect,
  kNoFaces,
  kFaceLabelMismatch,
  kDisconnected,
  kUnstable,
};

std::string to_string(Violation v);

struct ValidationReport {
  Violation violation = Violation::kNone;
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
};

/// Checks every invariant, stability included, and reports the first one
/// that fails.
ValidationReport validate(const RibbonGraphData& data);

class InvalidGraph : public Error {
 public:
  explicit InvalidGraph(ValidationReport report)
      : Error(to_string(report.violation) + ": " + report.message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct FaceWord {
  int label = 0;
  std::vector<int> half_edges;  // one sigma2-cycle, starting at its smallest half-edge
  std::vector<int> edges;       // edge of each half-edge; an edge may appear twice

  int degree() const { return int(half_edges.size()); }
};

class StableRibbonGraph {
 public:
  /// Builds the graph, enforcing the structural invariants (permutations,
  /// face labels, connectivity). Stability is not required here; see
  /// is_stable(). Throws InvalidGraph.
  explicit StableRibbonGraph(RibbonGraphData data);

  int num_half_edges() const { return int(sigma0_.size()); }
  int num_edges() const { return num_half_edges() / 2; }
  int num_vertices() const { return int(data_.vertices.size()); }
  int num_faces() const { return num_faces_; }
  /// Number of sigma0-cycles, i.e. local branches summed over vertices.
  int num_vertex_cycles() const { return num_cycles_; }

  int sigma0(int h) const { return sigma0_[h]; }
  int sigma0_inv(int h) const { return sigma0_inv_[h]; }
  static int sigma1(int h) { return h ^ 1; }
  int sigma2(int h) const { return sigma2_[h]; }
  static int edge_of(int h) { return h / 2; }

  int vertex_of(int h) const { return vertex_of_[h]; }
  int cycle_of(int h) const { return cycle_of_[h]; }
  int face_of(int h) const { return face_of_[h]; }
  int defect(int v) const { return data_.vertices[v].defect; }
  int degree(int v) const;

  const RibbonGraphData& data() const { return data_; }
  const std::vector<VertexData>& vertices() const { return data_.vertices; }

  /// Faces sorted by label.
  std::vector<FaceWord> faces() const;
  const FaceWord& face(int label) const { return faces_[label - 1]; }

  bool is_loop(int e) const { return vertex_of_[2 * e] == vertex_of_[2 * e + 1]; }
  bool is_ordinary() const;
  bool is_trivalent() const;
  bool is_stable() const;

  /// Data with face labels keyed by the smallest half-edge of each face.
  RibbonGraphData normalized_data() const;

 private:
  RibbonGraphData data_;
  std::vector<int> sigma0_, sigma0_inv_, sigma2_;
  std::vector<int> vertex_of_, cycle_of_, face_of_;
  std::vector<FaceWord> faces_;
  int num_faces_ = 0;
  int num_cycles_ = 0;
};

/// Arithmetic genus of the surface of embedding plus the sum of defects.
int genus(const StableRibbonGraph& g);

/// Perimeter of every face (index label-1): the sum of edge lengths along the
/// face word, counting an edge twice when both its sides bound the face.
RationalVector perimeters(const StableRibbonGraph& g, const RationalVector& lengths);

/// Incidence matrix M (faces x edges): multiplicity 0/1/2 of edge e in face i.
std::vector<std::vector<int>> face_edge_incidence(const StableRibbonGraph& g);

/// Relabels half-edges by an edge permutation plus optional flips, keeping all
/// structure: new edge edge_perm[e] carries old edge e, with its halves
/// swapped when flip[e] is set.
StableRibbonGraph relabel(const StableRibbonGraph& g, const std::vector<int>& edge_perm,
                          const std::vector<bool>& flip);

}  // namespace kcell
