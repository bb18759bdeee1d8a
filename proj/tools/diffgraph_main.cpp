// Command-line front end: construct finite groups, build their power /
// enhanced power / difference graphs, analyze connectivity, diameter and
// perfectness, run the theorem check suite, and embed arbitrary graphs into
// difference graphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffgraph/adjacency.hpp"
#include "diffgraph/embed.hpp"
#include "diffgraph/graph.hpp"
#include "diffgraph/group.hpp"
#include "diffgraph/perfect.hpp"
#include "diffgraph/verify.hpp"

using nlohmann::json;

namespace {

dg::Graph diff_of(const std::string& spec, const dg::GraphCaps& gcaps, dg::Group* out_group) {
  dg::Group g = dg::build_group(spec);
  dg::Graph gr = dg::build_diff_graph(g, gcaps);
  if (out_group) *out_group = g;
  return gr;
}

int cmd_group_info(const std::string& spec) {
  dg::Group g = dg::build_group(spec);
  std::cout << "spec:      " << g.spec_string() << "\n";
  switch (g.backend()) {
    case dg::Group::Backend::Cayley: std::cout << "backend:   cayley\n"; break;
    case dg::Group::Backend::Permutation: std::cout << "backend:   permutation\n"; break;
    case dg::Group::Backend::Factored: std::cout << "backend:   factored-abelian\n"; break;
  }
  std::cout << "order:     " << dg::id_str(g.order()) << "\n";
  std::cout << "primes:   ";
  for (dg::u64 p : g.prime_divisors()) std::cout << " " << p;
  std::cout << "\n";
  if (!g.enumerable()) {
    std::cout << "(group too large to enumerate; element-level reports unavailable)\n";
    return 0;
  }
  std::cout << "center:    " << g.center().size() << "\n";
  std::cout << "p-group:   " << (g.is_p_group() ? "yes" : "no") << "\n";
  std::cout << "nilpotent: " << (g.is_nilpotent() ? "yes" : "no") << "\n";
  std::cout << "eppo:      " << (g.is_eppo() ? "yes" : "no") << "\n";
  std::map<dg::u64, dg::u64> hist;
  for (dg::u64 i = 0; i < g.size(); ++i) ++hist[g.order_of(i)];
  std::cout << "element orders:";
  for (auto& [o, c] : hist) std::cout << " " << o << ":" << c;
  std::cout << "\n";
  return 0;
}

int cmd_graph(const std::string& spec, const std::string& kind, const std::string& format,
              const std::string& out, dg::u32 max_vertices) {
  dg::GraphCaps gcaps;
  gcaps.stream_max = max_vertices;
  dg::Group g = dg::build_group(spec);
  dg::Graph gr;
  if (kind == "pow") gr = dg::build_pow_graph(g, gcaps);
  else if (kind == "epow") gr = dg::build_epow_graph(g, gcaps);
  else gr = dg::build_diff_graph(g, gcaps);

  std::cout << "group " << g.spec_string() << ": " << kind << " graph has "
            << gr.num_vertices() << " vertices, " << gr.num_edges() << " edges\n";

  dg::GraphFormat fmt = dg::GraphFormat::EdgeList;
  if (format == "dot") fmt = dg::GraphFormat::Dot;
  else if (format == "json") fmt = dg::GraphFormat::Json;
  dg::GraphMeta meta{g.spec_string(), kind, &g};
  if (out == "-") {
    std::cout << dg::render_graph(gr, fmt, meta);
  } else if (!out.empty()) {
    dg::export_graph(gr, fmt, out, meta);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& spec, const std::string& graph_json, bool connectivity,
                bool diam, bool perfect, int hole_bound, int workers, const std::string& json_out) {
  dg::Graph gr;
  dg::Group g = dg::build_group("Z1");
  bool have_group = false;
  json report;
  if (!graph_json.empty()) {
    gr = dg::import_graph_json(graph_json);
    report["graph"] = graph_json;
  } else {
    gr = diff_of(spec, {}, &g);
    have_group = true;
    report["group"] = g.spec_string();
  }
  auto desc = [&](dg::ElementId id) {
    return have_group ? g.describe(id) + " #" + dg::id_str(id) : dg::id_str(id);
  };
  report["kind"] = "diff";
  report["vertices"] = gr.num_vertices();
  report["edges"] = gr.num_edges();
  std::cout << "difference graph: " << gr.num_vertices() << " vertices, " << gr.num_edges()
            << " edges\n";

  if (connectivity) {
    auto comps = dg::connected_components(gr);
    std::cout << "components: " << comps.count;
    if (comps.count == 1) std::cout << " (connected)";
    std::cout << "\n";
    json sizes = json::array();
    for (auto& c : comps.components) {
      sizes.push_back(c.size());
      std::cout << "  size " << c.size() << ": ";
      std::size_t shown = std::min<std::size_t>(c.size(), 8);
      for (std::size_t i = 0; i < shown; ++i) std::cout << (i ? ", " : "") << desc(c[i]);
      if (shown < c.size()) std::cout << ", ...";
      std::cout << "\n";
    }
    report["components"] = {{"count", comps.count}, {"sizes", sizes}};
  }
  if (diam) {
    auto rep = dg::diameter(gr, workers);
    if (!rep.finite) {
      std::cout << "diameter: infinite (per-component:";
      for (dg::u32 d : rep.component_diameters) std::cout << " " << d;
      std::cout << ")\n";
      report["diameter"] = "infinite";
      report["component_diameters"] = rep.component_diameters;
    } else {
      std::cout << "diameter: " << rep.value << "\n";
      if (!rep.geodesic.empty()) {
        std::cout << "  geodesic:";
        for (auto id : rep.geodesic) std::cout << " " << desc(id);
        std::cout << "\n";
      }
      report["diameter"] = rep.value;
      json path = json::array();
      for (auto id : rep.geodesic) path.push_back(dg::id_str(id));
      report["geodesic"] = path;
    }
  }
  if (perfect) {
    dg::PerfectOptions po;
    po.hole_bound = hole_bound;
    auto v = dg::is_perfect(gr, po);
    json pj;
    switch (v.status) {
      case dg::PerfectVerdict::Status::Perfect:
        std::cout << "perfect: yes\n";
        pj["status"] = "perfect";
        break;
      case dg::PerfectVerdict::Status::BoundedPerfect:
        std::cout << "perfect: no odd hole or antihole up to length " << v.bound
                  << " (bounded verdict)\n";
        pj["status"] = "bounded-perfect";
        pj["bound"] = v.bound;
        break;
      case dg::PerfectVerdict::Status::Imperfect: {
        std::cout << "perfect: NO - induced odd " << (v.witness_in_complement ? "antihole" : "hole")
                  << " of length " << v.witness.size() << ":";
        for (auto id : v.witness) std::cout << " " << desc(id);
        std::cout << "\n";
        pj["status"] = "imperfect";
        pj["witness_in_complement"] = v.witness_in_complement;
        json w = json::array();
        for (auto id : v.witness) w.push_back(dg::id_str(id));
        pj["witness"] = w;
        break;
      }
    }
    pj["nodes"] = v.nodes;
    report["perfect"] = pj;
  }
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    f << report.dump(2) << "\n";
    std::cout << "wrote " << json_out << "\n";
  }
  return 0;
}

int cmd_verify(const dg::SuiteOptions& opts, const std::string& out) {
  auto results = dg::run_suite(opts);
  for (const auto& r : results) {
    std::printf("%-14s %-24s %-14s (%.1f ms)\n", r.id.c_str(), r.name.c_str(),
                r.status_str().c_str(), r.wall_ms);
    if (r.status == dg::CheckResult::Status::Fail)
      std::cout << "  certificate: " << r.certificate.dump() << "\n";
  }
  if (!out.empty()) {
    std::ofstream f(out);
    f << dg::suite_report_json(results, opts).dump(2) << "\n";
    std::cout << "wrote " << out << "\n";
  }
  return dg::suite_failed(results) ? 1 : 0;
}

int cmd_embed(const std::string& path, const std::string& out) {
  dg::Graph input = dg::read_edgelist(path);
  dg::Embedding emb = dg::embed_graph(input);
  dg::EmbedCheck check = dg::verify_embedding(emb, input);
  std::cout << "embedded " << input.num_vertices() << " vertices into a group of order "
            << dg::id_str(emb.group.order()) << "\n";
  std::cout << "verification: " << (check.ok ? "pass" : "FAIL") << "\n";
  for (const auto& f : check.failures) std::cout << "  " << f << "\n";

  json j;
  j["primes"] = emb.primes;
  j["moduli"] = emb.moduli;
  j["group_order"] = dg::id_str(emb.group.order());
  json map;
  for (dg::u32 v = 0; v < input.num_vertices(); ++v)
    map[std::to_string(v)] = dg::id_str(emb.vertex_map[v]);
  j["map"] = map;
  j["report"] = {{"ok", check.ok}, {"failures", check.failures}};
  if (!out.empty()) {
    std::ofstream f(out);
    f << j.dump(2) << "\n";
    std::cout << "wrote " << out << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return check.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difference graphs of finite groups: construction and analysis"};
  app.require_subcommand(1);

  std::string spec, kind = "diff", format = "edgelist", out, graph_json, json_out;
  dg::u32 max_vertices = dg::GraphCaps{}.stream_max;
  bool connectivity = false, diam = false, perfect = false;
  int hole_bound = -1, workers = 0;

  auto* info = app.add_subcommand("group-info", "order, primes, center and predicates of a group");
  info->add_option("spec", spec, "group spec, e.g. 'Z6', 'D9', 'sd(Z7,Z12,3)', 'S4 x Z2'")
      ->required();

  auto* graph = app.add_subcommand("graph", "build and export a graph of a group");
  graph->add_option("spec", spec)->required();
  graph->add_option("--kind", kind, "pow | epow | diff")->check(CLI::IsMember({"pow", "epow", "diff"}));
  graph->add_option("--format", format, "dot | edgelist | json")
      ->check(CLI::IsMember({"dot", "edgelist", "json"}));
  graph->add_option("--out", out, "output path ('-' for stdout)");
  graph->add_option("--max-vertices", max_vertices, "graph construction cap");

  auto* analyze = app.add_subcommand("analyze", "connectivity / diameter / perfectness of D(G)");
  analyze->add_option("spec", spec);
  analyze->add_option("--graph-json", graph_json, "analyze an imported graph instead of a spec");
  analyze->add_flag("--connectivity", connectivity);
  analyze->add_flag("--diameter", diam);
  analyze->add_flag("--perfect", perfect);
  analyze->add_option("--hole-bound", hole_bound, "odd hole length bound (-1: default policy, 0: unbounded)");
  analyze->add_option("--workers", workers);
  analyze->add_option("--json", json_out, "write a JSON report");

  dg::SuiteOptions sopts;
  std::string report_out, cayley_dir;
  auto* verify = app.add_subcommand("verify", "run the theorem check suite");
  verify->add_option("--filter", sopts.filter, "glob over check ids (default '*')");
  verify->add_option("--max-order", sopts.max_order);
  verify->add_option("--seed", sopts.seed);
  verify->add_option("--workers", sopts.workers);
  verify->add_option("--hole-bound", sopts.hole_bound);
  verify->add_option("--cayley-dir", cayley_dir, "directory of cayley tables to add to the catalog");
  verify->add_option("--out", report_out, "write the JSON report here");

  std::string edges_path;
  auto* embed = app.add_subcommand("embed", "realize a graph as an induced subgraph of some D(G)");
  embed->add_option("edgelist", edges_path, "edgelist file: '<V> <E>' then 'u v' lines")->required();
  embed->add_option("--out", out, "write the embedding JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_group_info(spec);
    if (graph->parsed()) return cmd_graph(spec, kind, format, out, max_vertices);
    if (analyze->parsed()) {
      if (spec.empty() && graph_json.empty())
        throw dg::Error("analyze needs a group spec or --graph-json");
      if (!connectivity && !diam && !perfect) connectivity = diam = true;
      return cmd_analyze(spec, graph_json, connectivity, diam, perfect, hole_bound, workers,
                         json_out);
    }
    if (verify->parsed()) {
      sopts.cayley_dir = cayley_dir;
      return cmd_verify(sopts, report_out);
    }
    if (embed->parsed()) return cmd_embed(edges_path, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
