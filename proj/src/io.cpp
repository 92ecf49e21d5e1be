#include "kcell/io.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kcell {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw ParseError(what, 0); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) shape_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) shape_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) shape_error("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) shape_error("expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(rationals_to_json(m.row(r)));
  return rows;
}

Matrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || int(j.size()) != rows) shape_error("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const RationalVector row = rationals_from_json(j[r]);
    if (int(row.size()) != cols) shape_error("matrix row has the wrong length");
    for (int c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) shape_error("rationals are written as \"num/den\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    shape_error(e.what());
  }
}

Json rationals_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

RationalVector rationals_from_json(const Json& j) {
  if (!j.is_array()) shape_error("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json graph_to_json(const RibbonGraphData& data) {
  Json vertices = Json::array();
  for (const auto& v : data.vertices) vertices.push_back(Json{{"cycles", v.cycles}, {"defect", v.defect}});
  Json labels = Json::object();
  for (const auto& [h, label] : data.face_labels) labels[std::to_string(h)] = label;
  return Json{{"half_edges", data.half_edges}, {"vertices", vertices}, {"face_labels", labels}};
}

RibbonGraphData graph_from_json(const Json& j) {
  RibbonGraphData data;
  data.half_edges = int_field(j, "half_edges");
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) shape_error("\"vertices\" must be an array");
  for (const auto& v : vertices) {
    VertexData vd;
    const Json& cycles = field(v, "cycles");
    if (!cycles.is_array()) shape_error("\"cycles\" must be an array of arrays");
    for (const auto& c : cycles) vd.cycles.push_back(int_list(c));
    vd.defect = v.contains("defect") ? int_field(v, "defect") : 0;
    data.vertices.push_back(std::move(vd));
  }
  const Json& labels = field(j, "face_labels");
  if (!labels.is_object()) shape_error("\"face_labels\" must map half-edges to labels");
  for (const auto& [key, value] : labels.items()) {
    int h = 0;
    try {
      size_t used = 0;
      h = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      shape_error("face label key \"" + key + "\" is not a half-edge index");
    }
    if (!value.is_number_integer()) shape_error("face labels must be integers");
    data.face_labels[h] = value.get<int>();
  }
  return data;
}

Json inspect_json(const StableRibbonGraph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    vertices.push_back(Json{{"cycles", g.vertices()[v].cycles}, {"degree", g.degree(v)}, {"defect", g.defect(v)}});
  }
  Json faces = Json::array();
  for (const auto& f : g.faces()) {
    faces.push_back(Json{{"label", f.label}, {"degree", f.degree()}, {"half_edges", f.half_edges}, {"edges", f.edges}});
  }
  const ValidationReport report = validate(g.data());
  return Json{{"V", g.num_vertices()},
              {"E", g.num_edges()},
              {"F", g.num_faces()},
              {"genus", genus(g)},
              {"ordinary", g.is_ordinary()},
              {"trivalent", g.is_trivalent()},
              {"stable", g.is_stable()},
              {"validation", report.ok() ? std::string("ok") : report.message},
              {"automorphisms", automorphisms(g).order},
              {"key", canonical_key(g).hex()},
              {"vertices", vertices},
              {"faces", faces},
              {"graph", graph_to_json(g.data())}};
}

std::string inspect_text(const StableRibbonGraph& g) {
  std::ostringstream os;
  os << "V=" << g.num_vertices() << " E=" << g.num_edges() << " F=" << g.num_faces() << " genus " << genus(g) << "\n";
  os << "automorphisms " << automorphisms(g).order << "\n";
  os << "stable " << (g.is_stable() ? "yes" : "no") << ", ordinary " << (g.is_ordinary() ? "yes" : "no")
     << ", trivalent " << (g.is_trivalent() ? "yes" : "no") << "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "vertex " << v << ": degree " << g.degree(v) << ", defect " << g.defect(v) << ", cycles";
    for (const auto& c : g.vertices()[v].cycles) {
      os << " (";
      for (size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
      os << ")";
    }
    os << "\n";
  }
  for (const auto& f : g.faces()) {
    os << "face " << f.label << ": (";
    for (size_t k = 0; k < f.half_edges.size(); ++k) os << (k ? " " : "") << f.half_edges[k];
    os << ")\n";
  }
  return os.str();
}

std::string to_dot(const StableRibbonGraph& g) {
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "  v" << v << " [label=\"" << v;
    if (g.defect(v) > 0) os << " (" << g.defect(v) << ")";
    os << "\"];\n";
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    os << "  v" << g.vertex_of(2 * e) << " -- v" << g.vertex_of(2 * e + 1) << " [label=\"e" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", rational_to_json(c)}});
  return terms;
}

Polynomial polynomial_from_json(const Json& j, int num_vars) {
  if (!j.is_array()) shape_error("a polynomial is a list of monomials");
  Polynomial p(num_vars);
  for (const auto& t : j) {
    const std::vector<int> e = int_list(field(t, "exp"));
    if (int(e.size()) != num_vars) shape_error("monomial has the wrong number of exponents");
    for (int x : e)
      if (x < 0) shape_error("negative exponent");
    p.add_term(e, rational_from_json(field(t, "coef")));
  }
  return p;
}

Json form_to_json(const LocalForm& w) {
  Json terms = Json::array();
  for (const auto& [b, c] : w.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < w.dim(); ++i)
      if (b >> i & 1) idx.push_back(i);
    terms.push_back(Json{{"basis", idx}, {"coef", polynomial_to_json(c)}});
  }
  return Json{{"dim", w.dim()}, {"degree", w.degree()}, {"terms", terms}};
}

LocalForm form_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  const int degree = int_field(j, "degree");
  if (dim < 0 || dim > 32 || degree < 0) shape_error("bad form dimensions");
  LocalForm w(dim, degree);
  for (const auto& t : field(j, "terms")) {
    LocalForm::Basis b = 0;
    for (int i : int_list(field(t, "basis"))) {
      if (i < 0 || i >= dim || (b >> i & 1)) shape_error("bad basis index");
      b |= LocalForm::Basis(1) << i;
    }
    if (std::popcount(b) != degree) shape_error("basis element has the wrong degree");
    w.add_term(b, polynomial_from_json(field(t, "coef"), dim));
  }
  return w;
}

Json polytope_to_json(const Polytope& p) {
  Json cons = Json::array();
  for (const auto& h : p.constraints()) {
    cons.push_back(Json{{"normal", rationals_to_json(h.normal)}, {"offset", rational_to_json(h.offset)}, {"strict", h.strict}});
  }
  return Json{{"dim", p.dim()}, {"constraints", cons}};
}

Polytope polytope_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  std::vector<Halfspace> hs;
  for (const auto& c : field(j, "constraints")) {
    Halfspace h{rationals_from_json(field(c, "normal")), rational_from_json(field(c, "offset")),
                c.contains("strict") && c.at("strict").get<bool>()};
    if (int(h.normal.size()) != dim) shape_error("constraint normal has the wrong dimension");
    hs.push_back(std::move(h));
  }
  return Polytope(dim, std::move(hs));
}

Json complex_to_json(const PolytopalComplex& x) {
  Json polys = Json::array();
  for (const auto& p : x.polytopes()) polys.push_back(polytope_to_json(p));
  Json gl = Json::array();
  for (const auto& g : x.gluings()) {
    gl.push_back(Json{{"face", g.face}, {"parent", g.parent}, {"linear", matrix_to_json(g.map.linear)},
                      {"offset", rationals_to_json(g.map.offset)}});
  }
  return Json{{"polytopes", polys}, {"gluings", gl}};
}

PolytopalComplex complex_from_json(const Json& j) {
  PolytopalComplex x;
  for (const auto& p : field(j, "polytopes")) x.add_polytope(polytope_from_json(p));
  for (const auto& g : field(j, "gluings")) {
    const int face = int_field(g, "face"), parent = int_field(g, "parent");
    if (face < 0 || face >= x.size() || parent < 0 || parent >= x.size()) shape_error("gluing refers to a missing polytope");
    const int in = x.polytope(face).dim(), out = x.polytope(parent).dim();
    x.add_gluing(face, parent, AffineMap(matrix_from_json(field(g, "linear"), out, in), rationals_from_json(field(g, "offset"))));
  }
  return x;
}

Json exterior_form_to_json(const ExteriorForm& w) {
  Json pieces = Json::array();
  for (const auto& p : w.pieces) pieces.push_back(form_to_json(p));
  return Json{{"degree", w.degree}, {"pieces", pieces}};
}

ExteriorForm exterior_form_from_json(const Json& j) {
  std::vector<LocalForm> pieces;
  for (const auto& p : field(j, "pieces")) pieces.push_back(form_from_json(p));
  return ExteriorForm(int_field(j, "degree"), std::move(pieces));
}

Json chain_to_json(const Chain& c) {
  Json terms = Json::array();
  for (const auto& [coef, piece] : c.terms()) {
    Json verts = Json::array();
    for (const auto& v : piece.vertices) verts.push_back(rationals_to_json(v));
    terms.push_back(Json{{"coef", rational_to_json(coef)}, {"polytope", piece.polytope}, {"vertices", verts}});
  }
  return Json{{"terms", terms}};
}

Chain chain_from_json(const Json& j) {
  Chain c;
  for (const auto& t : field(j, "terms")) {
    Piece p{int_field(t, "polytope"), {}};
    for (const auto& v : field(t, "vertices")) p.vertices.push_back(rationals_from_json(v));
    c.add(rational_from_json(field(t, "coef")), std::move(p));
  }
  return c;
}

Json cell_to_json(const CellPolytope& cell) {
  Json out{{"graph", graph_to_json(cell.graph.data())},
           {"key", canonical_key(cell.graph).hex()},
           {"perimeters", rationals_to_json(cell.perimeters)},
           {"incidence", cell.incidence},
           {"rank", cell.rank},
           {"rank_deficient", cell.rank_deficient()},
           {"empty", cell.empty},
           {"dimension", cell.dimension()},
           {"free_edges", cell.chart.free_edges},
           {"dependent_edges", cell.chart.dependent_edges},
           {"lengths", Json{{"linear", matrix_to_json(cell.chart.lengths.linear)},
                            {"offset", rationals_to_json(cell.chart.lengths.offset)}}},
           {"polytope", polytope_to_json(cell.polytope)}};
  if (!cell.empty) {
    Json verts = Json::array();
    for (const auto& v : cell.polytope.vertices()) verts.push_back(rationals_to_json(v));
    out["vertices"] = verts;
    out["volume"] = rational_to_json(cell.dimension() == 0 ? Rational(1) : cell.polytope.volume());
  }
  return out;
}

Json contribution_to_json(const CellContribution& c) {
  return Json{{"key", c.key},
              {"automorphisms", c.automorphisms},
              {"empty", c.empty},
              {"sign", c.sign},
              {"coefficient", rational_to_json(c.coefficient)},
              {"volume", rational_to_json(c.volume)},
              {"contribution", rational_to_json(c.contribution)},
              {"free_edges", c.free_edges}};
}

Json intersection_to_json(const IntersectionResult& r) {
  Json ledger = Json::array();
  for (const auto& c : r.ledger) ledger.push_back(contribution_to_json(c));
  return Json{{"value", rational_to_json(r.value)}, {"perimeters", rationals_to_json(r.perimeters)}, {"ledger", ledger}};
}

Json complex_number_to_json(const Complex& z) { return to_string(z); }

Json projective_to_json(const ProjectivePoint& p) {
  Json out = Json::array();
  for (const auto& z : p.normalized().coords) out.push_back(complex_number_to_json(z));
  return out;
}

Json classes_to_json(const std::vector<GraphClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) {
    out.push_back(Json{{"key", c.key.code()}, {"automorphisms", c.automorphism_order}, {"graph", graph_to_json(c.representative.data())}});
  }
  return out;
}

std::vector<GraphClass> classes_from_json(const Json& j) {
  if (!j.is_array()) shape_error("expected a list of classes");
  std::vector<GraphClass> out;
  for (const auto& c : j) {
    StableRibbonGraph g(graph_from_json(field(c, "graph")));
    CanonicalKey key(int_list(field(c, "key")));
    if (canonical_key(g) != key) shape_error("cached class does not match its key");
    out.push_back(GraphClass{std::move(key), std::move(g), field(c, "automorphisms").get<long>()});
  }
  return out;
}

Json cells_to_json(const std::vector<CellClass>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json boundary = Json::array();
    for (const auto& [e, j] : c.boundary) boundary.push_back(Json{{"edge", e}, {"cell", j}});
    out.push_back(Json{{"key", c.graph.key.code()},
                       {"automorphisms", c.graph.automorphism_order},
                       {"dimension", c.dimension},
                       {"graph", graph_to_json(c.graph.representative.data())},
                       {"boundary", boundary},
                       {"parents", c.parents}});
  }
  return out;
}

std::vector<CellClass> cells_from_json(const Json& j) {
  if (!j.is_array()) shape_error("expected a list of cells");
  std::vector<CellClass> out;
  for (const auto& c : j) {
    StableRibbonGraph g(graph_from_json(field(c, "graph")));
    CanonicalKey key(int_list(field(c, "key")));
    CellClass cell{GraphClass{std::move(key), std::move(g), field(c, "automorphisms").get<long>()},
                   int_field(c, "dimension"), {}, int_list(field(c, "parents"))};
    for (const auto& b : field(c, "boundary")) cell.boundary.emplace_back(int_field(b, "edge"), int_field(b, "cell"));
    out.push_back(std::move(cell));
  }
  return out;
}

namespace {

template <class T, class Compute, class Load, class Store>
T through_cache(const std::optional<std::string>& dir, const std::string& name, Compute compute, Load load, Store store) {
  if (!dir || dir->empty()) return compute();
  namespace fs = std::filesystem;
  const fs::path path = fs::path(*dir) / name;
  if (fs::exists(path)) {
    try {
      return load(read_json_file(path.string()));
    } catch (const Error&) {
      // Stale or corrupt entries are recomputed and overwritten.
    }
  }
  T value = compute();
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  try {
    write_json_file(tmp.string(), store(value));
    fs::rename(tmp, path, ec);
  } catch (const Error&) {
  }
  return value;
}

std::string cache_name(const char* kind, int genus, int faces) {
  return std::string(kind) + "_g" + std::to_string(genus) + "_n" + std::to_string(faces) + ".json";
}

}  // namespace

std::vector<GraphClass> cached_trivalent(int genus, int faces, const std::optional<std::string>& cache_dir) {
  top_cell_edges(genus, faces);
  return through_cache<std::vector<GraphClass>>(
      cache_dir, cache_name("trivalent", genus, faces), [&] { return enumerate_trivalent(genus, faces); },
      [](const Json& j) { return classes_from_json(j); }, [](const auto& v) { return classes_to_json(v); });
}

std::vector<CellClass> cached_cells(int genus, int faces, const std::optional<std::string>& cache_dir) {
  top_cell_edges(genus, faces);
  return through_cache<std::vector<CellClass>>(
      cache_dir, cache_name("cells", genus, faces), [&] { return enumerate_cells(genus, faces); },
      [](const Json& j) { return cells_from_json(j); }, [](const auto& v) { return cells_to_json(v); });
}

}  // namespace kcell
