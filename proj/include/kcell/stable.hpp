#pragma once

// Edge contraction for stable ribbon graphs.

#include <vector>

#include "kcell/permgraph.hpp"

namespace kcell {

/// A validated request to contract a set of edges, split into the connected
/// components of the subgraph the edges span.
struct ContractionPlan {
  std::vector<int> edges;                    // sorted, distinct
  std::vector<std::vector<int>> components;  // each sorted; ordered by smallest edge
};

/// Throws Error when an edge is out of range or when some face would lose all
/// of its edges.
ContractionPlan make_plan(const StableRibbonGraph& g, std::vector<int> edges);

/// True when contracting `edges` leaves every face with at least one edge.
bool is_contractible(const StableRibbonGraph& g, const std::vector<int>& edges);

struct Contraction {
  StableRibbonGraph graph;
  /// old edge index -> new edge index, or -1 for contracted edges
  std::vector<int> edge_map;
};

/// Contracts one edge. Surviving edges keep their relative order; face labels
/// are carried over unchanged.
StableRibbonGraph contract_edge(const StableRibbonGraph& g, int e);
Contraction contract_edge_mapped(const StableRibbonGraph& g, int e);

/// Contracts a whole subset at once via first-return on sigma2; each
/// collapsed component becomes one vertex whose defect is the genus of the
/// induced graph on that component.
StableRibbonGraph contract_set(const StableRibbonGraph& g, const std::vector<int>& edges);
Contraction contract_set_mapped(const StableRibbonGraph& g, const std::vector<int>& edges);

/// The first-return structure on a connected edge subset. Half-edges are
/// renumbered by the sorted order of `edges`; faces get labels 1..m in order
/// of their smallest half-edge. The result need not be stable.
StableRibbonGraph induced_component_graph(const StableRibbonGraph& g, const std::vector<int>& edges);

}  // namespace kcell
