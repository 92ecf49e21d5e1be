// kcell command-line front end. Exit status: 0 success, 1 a checked property
// failed, 2 bad usage or input.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "kcell/io.hpp"
#include "kcell/stable.hpp"
#include "kcell/suite.hpp"

namespace fs = std::filesystem;
using namespace kcell;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

struct Common {
  std::string format = "json";
  int jobs = 1;
  unsigned long seed = 1;
};

std::optional<std::string> cache_dir() {
  if (const char* dir = std::getenv("KCELL_CACHE_DIR"); dir && *dir) return std::string(dir);
  return std::nullopt;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("not an integer: \"" + item + "\"");
    }
  }
  return out;
}

RationalVector parse_rationals(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir + ": " + ec.message());
}

int cmd_enumerate(const Common& c, int genus, int faces, bool all_cells, const std::string& out) {
  Json index{{"genus", genus}, {"faces", faces}, {"kind", all_cells ? "cells" : "trivalent"}};
  Json classes = Json::array();
  std::ostringstream text;
  if (!out.empty()) prepare_dir(out);
  auto record = [&](size_t i, const GraphClass& cls, Json extra) {
    Json entry{{"index", i}, {"key", cls.key.hex()}, {"automorphisms", cls.automorphism_order},
               {"edges", cls.representative.num_edges()}};
    for (auto& [k, v] : extra.items()) entry[k] = v;
    if (!out.empty()) {
      const std::string file = "class_" + std::to_string(i) + ".json";
      Json body = entry;
      body["graph"] = graph_to_json(cls.representative.data());
      write_json_file((fs::path(out) / file).string(), body);
      entry["file"] = file;
    }
    text << i << "  E=" << cls.representative.num_edges() << "  |Aut|=" << cls.automorphism_order << "  "
         << cls.key.hex() << "\n";
    classes.push_back(entry);
  };
  if (all_cells) {
    const auto cells = cached_cells(genus, faces, cache_dir());
    for (size_t i = 0; i < cells.size(); ++i) {
      Json boundary = Json::array();
      for (auto [edge, target] : cells[i].boundary) boundary.push_back(Json{{"edge", edge}, {"cell", target}});
      record(i, cells[i].graph, Json{{"dimension", cells[i].dimension}, {"boundary", boundary}, {"parents", cells[i].parents}});
    }
    index["count"] = cells.size();
  } else {
    const auto tri = cached_trivalent(genus, faces, cache_dir());
    for (size_t i = 0; i < tri.size(); ++i) record(i, tri[i], Json::object());
    index["count"] = tri.size();
  }
  index["classes"] = classes;
  if (!out.empty()) write_json_file((fs::path(out) / "index.json").string(), index);
  emit(c, index, "genus " + std::to_string(genus) + ", " + std::to_string(faces) + " faces: " +
                     index["count"].dump() + " classes\n" + text.str());
  return kOk;
}

int cmd_contract(const Common& c, const std::string& graph_file, const std::string& edges) {
  const StableRibbonGraph g(graph_from_json(read_json_file(graph_file)));
  const std::vector<int> es = parse_ints(edges);
  if (!is_contractible(g, es)) throw Error("edge set {" + edges + "} is not contractible in this graph");
  const StableRibbonGraph h = contract_set(g, es);
  emit(c, graph_to_json(h.data()), inspect_text(h));
  return kOk;
}

int cmd_cells(const Common& c, int genus, int faces, const std::string& perimeters, const std::string& out) {
  const RationalVector p = perimeters.empty() ? default_perimeters(faces) : parse_rationals(perimeters);
  if (int(p.size()) != faces) throw Error("expected " + std::to_string(faces) + " perimeters");
  const auto cells = cached_cells(genus, faces, cache_dir());
  if (!out.empty()) prepare_dir(out);
  Json list = Json::array();
  std::ostringstream text;
  int nonempty = 0;
  for (size_t i = 0; i < cells.size(); ++i) {
    const CellPolytope cp = cell_polytope(cells[i].graph.representative, p);
    Json j = cell_to_json(cp);
    j["index"] = i;
    j["automorphisms"] = cells[i].graph.automorphism_order;
    Json boundary = Json::array();
    for (auto [edge, target] : cells[i].boundary) boundary.push_back(Json{{"edge", edge}, {"cell", target}});
    j["boundary"] = boundary;
    if (!out.empty()) write_json_file((fs::path(out) / ("cell_" + std::to_string(i) + ".json")).string(), j);
    if (!cp.empty) ++nonempty;
    text << i << "  E=" << cells[i].dimension << "  dim=" << cp.dimension() << (cp.empty ? "  empty" : "")
         << (cp.rank_deficient() ? "  rank-deficient" : "") << "\n";
    list.push_back(std::move(j));
  }
  const Json result{{"genus", genus}, {"faces", faces}, {"perimeters", rationals_to_json(p)},
                    {"count", cells.size()}, {"nonempty", nonempty}, {"cells", list}};
  if (!out.empty()) {
    Json index = result;
    index.erase("cells");
    Json poset = Json::array();
    for (size_t i = 0; i < cells.size(); ++i) {
      Json b = Json::array();
      for (auto [edge, target] : cells[i].boundary) b.push_back(Json{{"edge", edge}, {"cell", target}});
      poset.push_back(Json{{"cell", i}, {"file", "cell_" + std::to_string(i) + ".json"}, {"boundary", b}});
    }
    index["poset"] = poset;
    write_json_file((fs::path(out) / "index.json").string(), index);
  }
  emit(c, result, std::to_string(cells.size()) + " cells, " + std::to_string(nonempty) + " non-empty\n" + text.str());
  return kOk;
}

struct IntersectArgs {
  int genus = 0;
  std::string d;
  std::string perimeters;
  bool check_p = false;
  std::string ledger;
  std::string expect;
};

int cmd_intersect(const Common& c, const IntersectArgs& a) {
  const std::vector<int> d = parse_ints(a.d);
  const int n = int(d.size());
  const RationalVector p = a.perimeters.empty() ? default_perimeters(n) : parse_rationals(a.perimeters);
  const auto classes = cached_trivalent(a.genus, n, cache_dir());
  const IntersectionResult r = intersection_number({a.genus, d, p, c.jobs}, classes);
  Json out{{"genus", a.genus}, {"d", d}, {"value", rational_to_json(r.value)}, {"perimeters", rationals_to_json(r.perimeters)}};
  std::string text = "<";
  for (int i = 0; i < n; ++i) text += (i ? " tau_" : "tau_") + std::to_string(d[i]);
  text += ">_" + std::to_string(a.genus) + " = " + to_string(r.value) + "\n";
  int status = kOk;
  if (a.check_p) {
    const RationalVector q = random_generic_perimeters(n, c.seed);
    const IntersectionResult r2 = intersection_number({a.genus, d, q, c.jobs}, classes);
    const bool same = r2.value == r.value;
    out["p_independence"] = Json{{"perimeters", rationals_to_json(q)}, {"value", rational_to_json(r2.value)}, {"agrees", same}};
    text += "at p = " + rationals_to_json(q).dump() + ": " + to_string(r2.value) + (same ? " (agrees)\n" : " (DIFFERS)\n");
    if (!same) status = kPropertyFailure;
  }
  if (!a.expect.empty()) {
    const Rational want = parse_rational(a.expect);
    out["expected"] = rational_to_json(want);
    if (want != r.value) {
      status = kPropertyFailure;
      text += "expected " + to_string(want) + "\n";
      Json ledger = Json::array();
      for (const auto& cc : r.ledger) ledger.push_back(contribution_to_json(cc));
      std::cerr << "value " << to_string(r.value) << " differs from the expected " << to_string(want)
                << "; per-cell ledger:\n"
                << ledger.dump(2) << "\n";
    }
  }
  if (!a.ledger.empty()) write_json_file(a.ledger, intersection_to_json(r));
  emit(c, out, text);
  return status;
}

int cmd_model0(const Common& c, const std::string& points) {
  const PointConfig x = parse_points(points);
  const auto maps = full_map(x);
  Json out = Json::array();
  std::string text;
  for (size_t i = 0; i < maps.size(); ++i) {
    out.push_back(projective_to_json(maps[i]));
    text += "F_" + std::to_string(i + 1) + " = [";
    for (size_t k = 0; k < maps[i].coords.size(); ++k) text += (k ? " : " : "") + to_string(maps[i].coords[k]);
    text += "]\n";
  }
  emit(c, out, text);
  return kOk;
}

int cmd_check(const Common& c, const std::string& suite, double scale) {
  const auto reports = run_suites(suite, SuiteOptions{c.seed, c.jobs, scale});
  Json out = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& r : reports) {
    out.push_back(report_to_json(r));
    ok = ok && r.ok();
    std::ostringstream line;
    line << (r.ok() ? "ok    " : "FAIL  ") << r.name << "  cases=" << r.cases << "  failures=" << r.failures.size()
         << "  " << r.seconds << "s\n";
    text += line.str();
    for (size_t k = 0; k < std::min<size_t>(r.failures.size(), 5); ++k) {
      text += "      " + r.failures[k].check + ": " + r.failures[k].message + "\n        " + r.failures[k].input.dump() + "\n";
    }
  }
  emit(c, suite == "all" ? out : out.front(), text);
  return ok ? kOk : kPropertyFailure;
}

int cmd_inspect(const Common& c, const std::string& file, bool dot) {
  const StableRibbonGraph g(graph_from_json(read_json_file(file)));
  if (dot) {
    std::cout << to_dot(g);
    return kOk;
  }
  emit(c, inspect_json(g), inspect_text(g));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable ribbon graphs, the Kontsevich cell complex and psi-class intersection numbers, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", common.seed, "Seed for all randomness")->capture_default_str();

  int genus = 0, faces = 0;
  std::string out_dir, perimeters;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate graph classes of type (g, n); cached under $KCELL_CACHE_DIR");
  bool trivalent = false, all_cells = false;
  enumerate->add_option("--genus", genus)->required();
  enumerate->add_option("--faces", faces)->required();
  auto* tri_flag = enumerate->add_flag("--trivalent", trivalent, "Top cells only (default)");
  enumerate->add_flag("--all-cells", all_cells, "All cells, with the boundary relation")->excludes(tri_flag);
  enumerate->add_option("--out", out_dir, "Directory for one JSON per class plus index.json");

  auto* contract = app.add_subcommand("contract", "Contract a set of edges");
  std::string graph_file, edges;
  contract->add_option("--graph", graph_file, "Graph JSON file")->required()->check(CLI::ExistingFile);
  contract->add_option("--edges", edges, "Comma-separated edge indices")->required();

  auto* cells = app.add_subcommand("cells", "Cell polytopes A_p for every cell of type (g, n)");
  cells->add_option("--genus", genus)->required();
  cells->add_option("--faces", faces)->required();
  cells->add_option("--perimeters", perimeters, "Comma-separated rationals (default 3,5,7,...)");
  cells->add_option("--out", out_dir, "Directory for one JSON per cell plus index.json");

  auto* intersect = app.add_subcommand("intersect", "Intersection number <tau_d1 ... tau_dn>_g");
  IntersectArgs ia;
  intersect->add_option("--genus", ia.genus)->required();
  intersect->add_option("--d", ia.d, "Comma-separated exponents")->required();
  intersect->add_option("--perimeters", ia.perimeters, "Comma-separated rationals (default 3,5,7,...)");
  intersect->add_flag("--check-p-independence", ia.check_p, "Recompute at a random generic p drawn from --seed");
  intersect->add_option("--ledger", ia.ledger, "Write every cell contribution to this JSON file");
  intersect->add_option("--expect", ia.expect, "Fail with the per-cell ledger unless the value equals this");

  auto* model0 = app.add_subcommand("model0", "The maps F_i of n >= 3 points of CP^1");
  std::string points;
  model0->add_option("--points", points, "Comma-separated points a+bi, or inf")->required();

  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  std::string suite = "all";
  double scale = 1.0;
  check->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()))->capture_default_str();
  check->add_option("--scale", scale, "Multiplier for the number of random cases")->capture_default_str();

  auto* inspect = app.add_subcommand("inspect", "Digest of a graph JSON file");
  bool dot = false;
  inspect->add_option("file", graph_file)->required()->check(CLI::ExistingFile);
  inspect->add_flag("--dot", dot, "Emit the underlying multigraph in DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(common, genus, faces, all_cells, out_dir);
    if (*contract) return cmd_contract(common, graph_file, edges);
    if (*cells) return cmd_cells(common, genus, faces, perimeters, out_dir);
    if (*intersect) return cmd_intersect(common, ia);
    if (*model0) return cmd_model0(common, points);
    if (*check) return cmd_check(common, suite, scale);
    if (*inspect) return cmd_inspect(common, graph_file, dot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
