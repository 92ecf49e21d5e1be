#pragma once

// Canonical forms, automorphism groups and exhaustive enumeration of stable
// ribbon graphs with numbered faces.

#include <compare>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "kcell/permgraph.hpp"

namespace kcell {

/// Total-order key of an isomorphism class (isomorphisms fix face labels and
/// preserve defects).
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<int> code) : code_(std::move(code)) {}

  const std::vector<int>& code() const { return code_; }
  /// Compact hexadecimal rendering, stable across runs.
  std::string hex() const;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;

 private:
  std::vector<int> code_;
};

/// A half-edge bijection, perm[h] = image of h.
using HalfEdgePermutation = std::vector<int>;

struct AutomorphismGroup {
  long order = 1;
  std::vector<HalfEdgePermutation> generators;
  std::vector<HalfEdgePermutation> elements;  // the whole group, identity first
};

struct CanonicalForm {
  CanonicalKey key;
  /// Relabeling old half-edge -> canonical position achieving the key.
  HalfEdgePermutation labeling;
};

CanonicalForm canonical_form(const StableRibbonGraph& g);
CanonicalKey canonical_key(const StableRibbonGraph& g);

/// Graph rebuilt from its canonical labeling, with sigma1 pairs (2k, 2k+1).
/// Isomorphic graphs give identical representatives.
StableRibbonGraph canonical_representative(const StableRibbonGraph& g);

AutomorphismGroup automorphisms(const StableRibbonGraph& g);

/// True when `perm` conjugates sigma0 and sigma1, maps vertex blocks to
/// vertex blocks with equal defects and fixes every face label.
bool is_isomorphism(const StableRibbonGraph& from, const StableRibbonGraph& to, const HalfEdgePermutation& perm);

/// An isomorphism from `a` to `b` (old half-edge of a -> half-edge of b), if any.
std::optional<HalfEdgePermutation> find_isomorphism(const StableRibbonGraph& a, const StableRibbonGraph& b);

/// Largest edge count the exhaustive enumerator accepts.
inline constexpr int kMaxEnumerationEdges = 9;

struct GraphClass {
  CanonicalKey key;
  StableRibbonGraph representative;
  long automorphism_order = 1;
};

/// All classes of connected ordinary trivalent ribbon graphs of genus g with
/// n numbered faces, sorted by key. Throws Error for unstable (g, n) or above
/// the size guard.
std::vector<GraphClass> enumerate_trivalent(int genus, int faces);

struct CellClass {
  GraphClass graph;
  int dimension = 0;  // number of edges
  /// (edge of this representative, index of the contracted cell)
  std::vector<std::pair<int, int>> boundary;
  /// indices of cells having this one as a single-edge contraction
  std::vector<int> parents;
};

/// Closure of the trivalent classes under admissible single-edge
/// contractions, ordered by decreasing dimension then key.
std::vector<CellClass> enumerate_cells(int genus, int faces);

/// Checks 2 - 2g - n < 0 and the size guard, returning E = 6g - 6 + 3n.
int top_cell_edges(int genus, int faces);

}  // namespace kcell
