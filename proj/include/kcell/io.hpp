#pragma once

// JSON encodings of graphs, cells, forms, chains and results. Rationals are
// always written as "num/den" strings.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "kcell/cells.hpp"
#include "kcell/intersect.hpp"
#include "kcell/model0.hpp"

namespace kcell {

using Json = nlohmann::ordered_json;

/// Malformed input; `offset` is the byte position reported by the parser
/// (0 when the text parsed but had the wrong shape).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset) : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json rationals_to_json(const RationalVector& v);
RationalVector rationals_from_json(const Json& j);

Json graph_to_json(const RibbonGraphData& data);
/// Throws ParseError on a wrong shape; the graph itself is not validated.
RibbonGraphData graph_from_json(const Json& j);

/// Faces, genus, degrees, automorphism order and the stability verdict.
Json inspect_json(const StableRibbonGraph& g);
std::string inspect_text(const StableRibbonGraph& g);
/// Plain structural multigraph in DOT (vertices and edges only).
std::string to_dot(const StableRibbonGraph& g);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int num_vars);
Json form_to_json(const LocalForm& w);
LocalForm form_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);
Json complex_to_json(const PolytopalComplex& x);
PolytopalComplex complex_from_json(const Json& j);
Json exterior_form_to_json(const ExteriorForm& w);
ExteriorForm exterior_form_from_json(const Json& j);
Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

Json cell_to_json(const CellPolytope& cell);
Json contribution_to_json(const CellContribution& c);
Json intersection_to_json(const IntersectionResult& r);

Json complex_number_to_json(const Complex& z);
Json projective_to_json(const ProjectivePoint& p);

/// Cached enumerations, keyed by (g, n, kind) under a directory.
Json classes_to_json(const std::vector<GraphClass>& classes);
std::vector<GraphClass> classes_from_json(const Json& j);
Json cells_to_json(const std::vector<CellClass>& cells);
std::vector<CellClass> cells_from_json(const Json& j);

/// enumerate_trivalent / enumerate_cells through an optional cache directory.
std::vector<GraphClass> cached_trivalent(int genus, int faces, const std::optional<std::string>& cache_dir);
std::vector<CellClass> cached_cells(int genus, int faces, const std::optional<std::string>& cache_dir);

}  // namespace kcell
