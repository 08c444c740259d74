// tropmod: combinatorial models of moduli spaces of tropical curves.
//
// Subcommands: enumerate, delta, fiber, space, reproduce.  All randomness is
// driven by --seed, so runs are byte-identical for identical inputs.
// Exit status: 0 success, 1 usage error, 2 internal consistency failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tropmod/cache.hpp"
#include "tropmod/cw_complex.hpp"
#include "tropmod/reproduce.hpp"
#include "tropmod/version.hpp"

using json = nlohmann::ordered_json;
using namespace tropmod;

namespace {

struct GlobalOptions {
  unsigned seed = 0;
  long long budget = 2000000;
  int restarts = 32;
  int threads = 1;
  int max_genus = 5;
  std::string cache_dir;
  std::string format = "json";

  Cache cache() const {
    if (const char* env = std::getenv("TROPMOD_CACHE")) return Cache(env);
    return Cache(cache_dir);
  }

  void guard_genus(int g) const {
    if (g > max_genus)
      throw CLI::ValidationError("--genus",
                                 "genus " + std::to_string(g) + " exceeds the guard (" +
                                     std::to_string(max_genus) +
                                     "); raise it with --max-genus if you mean it");
  }
};

std::string cell_label(const SubdividedGraph& s, int cell) {
  const SubdividedGraph::Cell& c = s.cells[cell];
  switch (c.kind) {
    case SubdividedGraph::CellKind::Vertex:
      return "v" + std::to_string(c.ref);
    case SubdividedGraph::CellKind::Midpoint:
      return "m" + std::to_string(c.ref);
    case SubdividedGraph::CellKind::FullEdge:
      return "e" + std::to_string(c.ref);
    case SubdividedGraph::CellKind::HalfEdge:
      return "h" + std::to_string(c.ref);
  }
  return "?";
}

json class_row(const FilteredClass& fc) {
  json row;
  row["canonical"] = fc.form.hex();
  row["vertices"] = fc.representative.graph().num_vertices();
  row["edges"] = fc.representative.graph().num_edges();
  row["autOrder"] = automorphisms(fc.representative).order();
  row["depth"] = fc.depth;
  return row;
}

std::string catalog_to_dot(const std::vector<StableClass>& classes, int genus) {
  std::ostringstream os;
  os << "graph genus_" << genus << "_catalog {\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    const MultiGraph& g = classes[i].representative;
    os << "  subgraph cluster_" << i << " {\n";
    os << "    label=\"" << classes[i].form.hex() << "\";\n";
    for (int v = 0; v < g.num_vertices(); ++v)
      os << "    g" << i << "v" << v << " [shape=point];\n";
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [u, w] = g.endpoints(e);
      os << "    g" << i << "v" << u << " -- g" << i << "v" << w << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

int run_enumerate(const GlobalOptions& opt, int genus, bool filtered) {
  opt.guard_genus(genus);
  Cache cache = opt.cache();
  std::vector<StableClass> classes = cached_stable_graphs(genus, cache);
  if (opt.format == "dot") {
    std::cout << catalog_to_dot(classes, genus);
    return 0;
  }
  json rows = json::array();
  for (const StableClass& sc : classes) {
    if (!filtered) {
      rows.push_back(
          class_row(FilteredClass{FilteredGraph::trivial(sc.representative), sc.form, 1}));
      continue;
    }
    for (const FilteredClass& fc : cached_filtered_structures(sc, cache))
      rows.push_back(class_row(fc));
  }
  if (opt.format == "csv") {
    std::cout << "canonical,vertices,edges,autOrder,depth\n";
    for (const auto& r : rows)
      std::cout << r["canonical"].get<std::string>() << "," << r["vertices"] << ","
                << r["edges"] << "," << r["autOrder"] << "," << r["depth"] << "\n";
  } else if (opt.format == "text") {
    for (const auto& r : rows)
      std::cout << r["canonical"].get<std::string>() << " v=" << r["vertices"]
                << " e=" << r["edges"] << " |Aut|=" << r["autOrder"]
                << " depth=" << r["depth"] << "\n";
  } else {
    std::cout << rows.dump(2) << "\n";
  }
  return 0;
}

int run_delta(const GlobalOptions& opt, int genus, const std::string& checks, bool collapse) {
  opt.guard_genus(genus);
  DeltaComplex dc = build_delta(genus, opt.cache());
  if (opt.format == "dot") {
    std::cout << skeleton_to_dot(dc);
    return 0;
  }
  json out;
  out["genus"] = genus;
  out["cells"] = dc.f_vector();
  auto [dim, pure] = dimension_and_purity(dc);
  out["dimension"] = dim;
  std::istringstream cs(checks);
  std::string item;
  while (std::getline(cs, item, ',')) {
    if (item == "purity")
      out["pure"] = pure;
    else if (item == "connectivity")
      out["connected"] = is_connected(dc);
    else if (item == "euler")
      out["euler"] = euler_characteristic(dc);
    else if (!item.empty())
      throw CLI::ValidationError("--check", "unknown check: " + item);
  }
  if (collapse) {
    CollapseCertificate cert =
        collapse_search(face_complex(dc), opt.seed, opt.budget, opt.restarts, opt.threads);
    json cj;
    cj["verdict"] = cert.collapsible ? "collapsible" : "unknown";
    if (cert.collapsible) {
      cj["steps"] = cert.steps.size();
      cj["restartsUsed"] = cert.restarts_used;
      json pairs = json::array();
      for (const CollapseStep& s : cert.steps)
        pairs.push_back(json::array({s.free_face, s.coface}));
      cj["pairs"] = pairs;
      cj["survivingVertex"] = cert.surviving_vertex;
    }
    out["collapse"] = cj;
  }
  if (opt.format == "text") {
    std::cout << "genus " << genus << ": cells per dim (";
    for (size_t i = 0; i < out["cells"].size(); ++i)
      std::cout << (i ? "," : "") << out["cells"][i];
    std::cout << "), dim " << dim << "\n";
    for (const char* key : {"pure", "connected", "euler"})
      if (out.contains(key)) std::cout << key << ": " << out[key] << "\n";
    if (out.contains("collapse"))
      std::cout << "collapse: " << out["collapse"]["verdict"].get<std::string>() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_fiber(const GlobalOptions& opt, int genus, const std::string& cls_hex, int n,
              bool orbits) {
  opt.guard_genus(genus);
  Cache cache = opt.cache();
  std::vector<FilteredClass> all;
  for (const StableClass& sc : cached_stable_graphs(genus, cache))
    for (FilteredClass& fc : cached_filtered_structures(sc, cache))
      all.push_back(std::move(fc));
  const FilteredClass* found = nullptr;
  for (const FilteredClass& fc : all)
    if (fc.form.hex() == cls_hex) found = &fc;
  if (!found)
    throw CLI::ValidationError("--class", "no genus-" + std::to_string(genus) +
                                              " class with canonical form " + cls_hex);
  json out;
  out["class"] = cls_hex;
  out["depth"] = found->depth;
  if (orbits) {
    FiberComplex fc = build_fiber_complex(found->representative, n);
    out["poly"] = fc.poly.coeffs();
    json table = json::array();
    for (const CubeOrbit& o : fc.orbits) {
      json row;
      row["dim"] = o.dim;
      std::string locus;
      for (int c : o.cells) locus += (locus.empty() ? "" : " ") + cell_label(fc.s, c);
      row["locus"] = locus;
      table.push_back(row);
    }
    out["orbits"] = table;
  } else {
    out["poly"] = fiber_poly(subdivide(found->representative), n).coeffs();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_space(const GlobalOptions& opt, int genus, int n, int sweep, bool poly, bool euler,
              bool homology, bool asymptotic) {
  opt.guard_genus(genus);
  DeltaComplex dc = build_delta(genus, opt.cache());
  if (sweep >= 0) {
    std::cout << "n,euler,cells\n";
    for (int i = 0; i <= sweep; ++i) {
      CellPoly p = total_poly(dc, i);
      std::cout << i << "," << p.euler() << ",\"";
      for (size_t d = 0; d < p.coeffs().size(); ++d)
        std::cout << (d ? " " : "") << p.coeffs()[d];
      std::cout << "\"\n";
    }
    return 0;
  }
  if (euler && !poly && !homology && !asymptotic && opt.format != "json") {
    std::cout << euler_x(dc, n) << "\n";
    return 0;
  }
  bool all = !poly && !euler && !homology && !asymptotic;
  json out;
  out["genus"] = genus;
  out["n"] = n;
  if (poly || euler || all) {
    CellPoly p = total_poly(dc, n);
    if (poly || all) out["poly"] = p.coeffs();
    if (euler || all) out["euler"] = p.euler();
  }
  if (homology || all) {
    CWComplex cw = build_cw(dc, n);
    ChainComplexZ2 cc = cw.chain();
    out["cells"] = cc.cell_counts;
    out["betti"] = cc.betti();
    if (!cw.warnings.empty()) out["warnings"] = cw.warnings;
  }
  if (asymptotic) {
    AsymptoticReport rep = asymptotic_coefficient(dc);
    json aj;
    aj["base"] = rep.base;
    aj["coefficient"] = rep.coefficient.str();
    if (!rep.anomalies.empty()) aj["anomalies"] = rep.anomalies;
    out["asymptotic"] = aj;
  }
  if (opt.format == "text") {
    for (auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_reproduce(const GlobalOptions& opt, bool as_json, bool skip_exploratory) {
  ReproduceOptions ro;
  ro.seed = opt.seed;
  ro.collapse_budget = opt.budget;
  ro.exploratory = !skip_exploratory;
  ro.cache = opt.cache();
  std::vector<ReportRow> rows = reproduce_all(ro);
  if (as_json) {
    json out = json::array();
    for (const ReportRow& r : rows) {
      json row;
      row["status"] = r.status == ReportRow::PASS   ? "pass"
                      : r.status == ReportRow::FAIL ? "fail"
                                                    : "report";
      row["id"] = r.id;
      row["claim"] = r.claim;
      row["detail"] = r.detail;
      out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_report(rows);
  }
  return report_ok(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial models of moduli spaces of tropical curves"};
  app.set_version_flag("--version", std::string("tropmod ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opt;
  app.add_option("--seed", opt.seed, "seed for all randomized searches")->capture_default_str();
  app.add_option("--budget", opt.budget, "step budget for collapse searches")
      ->capture_default_str();
  app.add_option("--restarts", opt.restarts, "randomized restarts for collapse searches")
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads for restart batches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-genus", opt.max_genus, "guard against accidentally huge runs")
      ->capture_default_str();
  app.add_option("--cache-dir", opt.cache_dir,
                 "result cache directory (TROPMOD_CACHE overrides)");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}))
      ->capture_default_str();

  int genus = 1, n = 0, sweep = -1;
  bool filtered = false, collapse = false, orbits = false;
  bool poly = false, euler = false, homology = false, asymptotic = false;
  bool as_json = false, skip_exploratory = false;
  std::string checks = "purity,connectivity,euler", cls_hex;

  CLI::App* enumerate = app.add_subcommand("enumerate", "stable graph classes of one genus");
  enumerate->add_option("--genus", genus, "graph genus")->required();
  enumerate->add_flag("--filtered", filtered, "list filtered-by-forests structures instead");

  CLI::App* delta = app.add_subcommand("delta", "the generalized simplicial complex");
  delta->add_option("--genus", genus, "graph genus")->required();
  delta->add_option("--check", checks, "comma list: purity,connectivity,euler")
      ->capture_default_str();
  delta->add_flag("--collapse", collapse, "search for a collapsing sequence");

  CLI::App* fiber = app.add_subcommand("fiber", "quotient cubical complex of one class");
  fiber->add_option("--genus", genus, "graph genus")->required();
  fiber->add_option("--class", cls_hex, "canonical form (hex) of the filtered class")
      ->required();
  fiber->add_option("--n", n, "number of marked points")->required();
  fiber->add_flag("--orbits", orbits, "list the cube orbits");

  CLI::App* space = app.add_subcommand("space", "the CW model of the moduli space");
  space->add_option("--genus", genus, "graph genus")->required();
  space->add_option("--n", n, "number of marked points");
  space->add_option("--sweep", sweep, "emit a CSV table for n = 0..SWEEP");
  space->add_flag("--poly", poly, "cell generating polynomial");
  space->add_flag("--euler", euler, "Euler characteristic");
  space->add_flag("--homology", homology, "Z2 Betti numbers");
  space->add_flag("--asymptotic", asymptotic, "leading Euler coefficient");

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the full reproduction suite");
  reproduce->add_flag("--json", as_json, "machine-readable rows");
  reproduce->add_flag("--skip-exploratory", skip_exploratory, "skip the report-only section");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return run_enumerate(opt, genus, filtered);
    if (delta->parsed()) return run_delta(opt, genus, checks, collapse);
    if (fiber->parsed()) return run_fiber(opt, genus, cls_hex, n, orbits);
    if (space->parsed())
      return run_space(opt, genus, n, sweep, poly, euler, homology, asymptotic);
    if (reproduce->parsed()) return run_reproduce(opt, as_json, skip_exploratory);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InternalCheckFailure& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
