#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "diffgraph/adjacency.hpp"
#include "diffgraph/graph.hpp"
#include "oracles.hpp"

using namespace dg;

namespace {

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

// labeled edge set for backend-independent comparison
std::set<std::pair<ElementId, ElementId>> labeled_edges(const Graph& gr) {
  std::set<std::pair<ElementId, ElementId>> out;
  for (auto& [u, v] : gr.edge_list()) out.insert({gr.label(u), gr.label(v)});
  return out;
}

Graph oracle_diff_graph(const Group& g) {
  auto m = oracle::pair_matrices(g);
  std::vector<char> used(m.n, 0);
  std::vector<std::pair<u32, u32>> edges;
  for (u64 a = 0; a < m.n; ++a)
    for (u64 b = a + 1; b < m.n; ++b)
      if (m.at(m.diff, a, b)) {
        edges.emplace_back(static_cast<u32>(a), static_cast<u32>(b));
        used[a] = used[b] = 1;
      }
  std::vector<ElementId> labels;
  std::vector<u32> where(m.n);
  for (u64 i = 0; i < m.n; ++i)
    if (used[i]) {
      where[i] = static_cast<u32>(labels.size());
      labels.push_back(i);
    }
  for (auto& e : edges) e = {where[e.first], where[e.second]};
  return Graph::build(std::move(labels), edges);
}

}  // namespace

TEST_CASE("Pow(Z6) has 13 edges; EPow of cyclic groups is complete") {
  Group z6 = build_group("Z6");
  Graph pow = build_pow_graph(z6);
  CHECK(pow.num_vertices() == 6);
  CHECK(pow.num_edges() == 13);
  // brute-force recount over all 15 pairs
  auto m = oracle::pair_matrices(z6);
  u64 count = 0;
  for (u64 a = 0; a < 6; ++a)
    for (u64 b = a + 1; b < 6; ++b)
      if (m.at(m.pow, a, b)) ++count;
  CHECK(count == 13);

  for (u64 n : {2, 5, 8, 12}) {
    Graph epow = build_epow_graph(build_group("Z" + std::to_string(n)));
    CHECK(epow.num_edges() == n * (n - 1) / 2);
  }
}

TEST_CASE("Pow = EPow exactly for eppo groups (S3)") {
  Group s3 = build_group("S3");
  CHECK(labeled_edges(build_pow_graph(s3)) == labeled_edges(build_epow_graph(s3)));
  Graph d = build_diff_graph(s3);
  CHECK(d.num_vertices() == 0);
}

TEST_CASE("D(Z6) is the path 2 - 3 - 4") {
  Graph d = build_diff_graph(build_group("Z6"));
  CHECK(d.num_vertices() == 3);
  CHECK(d.labels() == std::vector<ElementId>{2, 3, 4});
  CHECK(labeled_edges(d) ==
        std::set<std::pair<ElementId, ElementId>>{{2, 3}, {3, 4}});
  auto rep = diameter(d);
  CHECK(rep.finite);
  CHECK(rep.value == 2);
}

TEST_CASE("difference graphs of p-groups are empty") {
  for (const char* spec : {"D8", "Z16", "Z2 x Z2 x Z2", "D4", "Z27"}) {
    Graph d = build_diff_graph(build_group(spec));
    CHECK(d.num_vertices() == 0);
    CHECK(d.num_edges() == 0);
  }
}

TEST_CASE("diff graph matches the brute-force oracle on mixed backends") {
  for (const char* spec : {"Z6", "Z12", "Z30", "S4", "A4", "D6", "D15", "sd(Z3,Z4,2)",
                           "Z4 x Z4 x Z6", "S3 x S3", "sd(Z7,Z12,3)"}) {
    Group g = build_group(spec);
    Graph got = build_diff_graph(g);
    Graph want = oracle_diff_graph(g);
    INFO("group ", spec);
    CHECK(got.labels() == want.labels());
    CHECK(labeled_edges(got) == labeled_edges(want));
  }
}

TEST_CASE("streaming and dense routes agree edge-for-edge on S5 and S6") {
  for (const char* spec : {"S5", "S6"}) {
    Group sym = build_group(spec);
    REQUIRE(sym.backend() == Group::Backend::Permutation);
    Graph streamed = build_diff_graph(sym);

    auto path = tmp_file(std::string("dual_") + spec + ".cayley");
    export_cayley(sym, path);
    Group cay = import_cayley(path);
    REQUIRE(cay.backend() == Group::Backend::Cayley);
    Graph dense = build_diff_graph(cay);

    // ids coincide: cayley index = enumeration index of the permutation group
    CHECK(streamed.labels() == dense.labels());
    CHECK(labeled_edges(streamed) == labeled_edges(dense));
  }
}

TEST_CASE("D(S3 x S3): ten vertices in two components of five") {
  Graph d = build_diff_graph(build_group("S3 x S3"));
  CHECK(d.num_vertices() == 10);
  auto rep = connected_components(d);
  CHECK(rep.count == 2);
  CHECK(rep.components[0].size() == 5);
  CHECK(rep.components[1].size() == 5);
  auto diam = diameter(d);
  CHECK_FALSE(diam.finite);
  CHECK(diam.component_diameters == std::vector<u32>{2, 2});
}

TEST_CASE("components of the empty graph") {
  std::vector<std::pair<u32, u32>> none;
  Graph empty = Graph::build({}, none);
  auto rep = connected_components(empty);
  CHECK(rep.count == 0);
  auto diam = diameter(empty);
  CHECK(diam.finite);
  CHECK(diam.value == 0);
}

TEST_CASE("single edge graph has diameter 1; distances carry valid paths") {
  std::vector<std::pair<u32, u32>> e = {{0, 1}};
  Graph g = Graph::build({10, 20}, e);
  auto rep = diameter(g);
  CHECK(rep.finite);
  CHECK(rep.value == 1);
  CHECK(rep.geodesic == std::vector<ElementId>{10, 20});

  Graph d = build_diff_graph(build_group("Z4 x Z4 x Z6"));
  Group g96 = build_group("Z4 x Z4 x Z6");
  auto path = distance(d, g96.from_tuple({0, 2, 4}), g96.from_tuple({2, 2, 4}));
  CHECK(path.connected);
  CHECK(path.dist == 4);
  CHECK(path.path.size() == 5);
  for (std::size_t i = 0; i + 1 < path.path.size(); ++i) {
    auto a = d.index_of(path.path[i]), b = d.index_of(path.path[i + 1]);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(d.adjacent(*a, *b));
  }
  // diameter independent of worker count
  CHECK(diameter(d, 1).value == diameter(d, 4).value);
}

TEST_CASE("complement: K5 to empty, involution, cap") {
  std::vector<std::pair<u32, u32>> edges;
  std::vector<ElementId> labels;
  for (u32 i = 0; i < 5; ++i) {
    labels.push_back(i);
    for (u32 j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  }
  Graph k5 = Graph::build(std::move(labels), edges);
  Graph ck5 = complement(k5);
  CHECK(ck5.num_edges() == 0);
  Graph back = complement(ck5);
  CHECK(labeled_edges(back) == labeled_edges(k5));

  Graph d = build_diff_graph(build_group("Z30"));
  CHECK(labeled_edges(complement(complement(d))) == labeled_edges(d));
}

TEST_CASE("induced subgraph laws: rotations of D_n, A_n in S_n, factor in product") {
  // D(D6) lives on the rotation subgroup and induces D(Z6) there
  Group d6 = build_group("D6");
  Graph dd6 = build_diff_graph(d6);
  for (ElementId v : dd6.labels()) CHECK(v < 6);  // no reflection vertices
  Graph dz6 = build_diff_graph(build_group("Z6"));
  // rotation ids in D6 equal the Z6 ids under r^k <-> k
  CHECK(dd6.labels() == dz6.labels());
  CHECK(labeled_edges(dd6) == labeled_edges(dz6));

  // A4 inside S4: map via image arrays
  Group a4 = build_group("A4");
  Group s4 = build_group("S4");
  Graph da4 = build_diff_graph(a4);
  Graph ds4 = build_diff_graph(s4);
  std::vector<ElementId> image;
  for (ElementId v : da4.labels()) image.push_back(s4.from_perm(a4.to_perm(v)));
  Graph induced = induced_subgraph(ds4, image);
  CHECK(induced.num_vertices() == da4.num_vertices());
  std::set<std::pair<ElementId, ElementId>> mapped;
  for (auto& [u, v] : da4.edge_list()) {
    ElementId a = s4.from_perm(a4.to_perm(da4.label(u)));
    ElementId b = s4.from_perm(a4.to_perm(da4.label(v)));
    mapped.insert({std::min(a, b), std::max(a, b)});
  }
  CHECK(mapped == labeled_edges(induced));

  // Z6 inside Z6 x Z5 via x -> (x, 0)
  Group prod = build_group("Z6 x Z5");
  Graph dp = build_diff_graph(prod);
  std::vector<ElementId> im;
  for (ElementId v : dz6.labels()) im.push_back(prod.from_tuple({static_cast<u64>(v), 0}));
  Graph ind = induced_subgraph(dp, im);
  std::set<std::pair<ElementId, ElementId>> want;
  for (auto& [u, v] : dz6.edge_list()) {
    ElementId a = prod.from_tuple({static_cast<u64>(dz6.label(u)), 0});
    ElementId b = prod.from_tuple({static_cast<u64>(dz6.label(v)), 0});
    want.insert({std::min(a, b), std::max(a, b)});
  }
  CHECK(want == labeled_edges(ind));
}

TEST_CASE("difference-graph vertex laws on the small corpus") {
  for (const char* spec : {"Z6", "Z12", "Z30", "D6", "D15", "S4", "S5", "A5",
                           "sd(Z7,Z12,3)", "Z4 x Z4 x Z6", "Z30 x Z2"}) {
    Group g = build_group(spec);
    Graph d = build_diff_graph(g);
    INFO("group ", spec);
    for (u32 v = 0; v < d.num_vertices(); ++v) {
      // no isolated vertices survive
      CHECK(d.degree(v) > 0);
      // prime-power neighbour law
      bool pp_neighbor = false;
      d.for_each_neighbor(v, [&](u32 w) {
        u64 o = g.order_of(d.label(w));
        if (is_prime_power(o)) pp_neighbor = true;
      });
      CHECK(pp_neighbor);
      // a vertex of prime-power order p^a has a neighbour of order q^b, q != p
      u64 p = 0;
      if (is_prime_power(g.order_of(d.label(v)), &p)) {
        bool cross = false;
        d.for_each_neighbor(v, [&](u32 w) {
          u64 q = 0;
          if (is_prime_power(g.order_of(d.label(w)), &q) && q != p) cross = true;
        });
        CHECK(cross);
      }
    }
    // E(Pow) subset of E(EPow)
    if (g.size() <= 150) {
      Graph pow = build_pow_graph(g);
      Graph epow = build_epow_graph(g);
      for (auto& [u, v] : pow.edge_list()) {
        auto a = epow.index_of(pow.label(u)), b = epow.index_of(pow.label(v));
        REQUIRE(a);
        REQUIRE(b);
        CHECK(epow.adjacent(*a, *b));
      }
    }
  }
}

TEST_CASE("exports: edgelist, dot, json; determinism and round trip") {
  Group z6 = build_group("Z6");
  Graph d = build_diff_graph(z6);
  GraphMeta meta{"Z6", "diff", &z6};

  std::string el = render_graph(d, GraphFormat::EdgeList, meta);
  // exactly two edge lines after the counts line
  auto pos = el.find("\n3 2\n");
  REQUIRE(pos != std::string::npos);
  CHECK(el.substr(pos) == "\n3 2\n0 1\n1 2\n");

  // byte determinism
  CHECK(render_graph(d, GraphFormat::Dot, meta) == render_graph(d, GraphFormat::Dot, meta));
  CHECK(render_graph(d, GraphFormat::Json, meta) == render_graph(d, GraphFormat::Json, meta));

  // empty graph still renders
  std::vector<std::pair<u32, u32>> none;
  Graph empty = Graph::build({}, none);
  CHECK(render_graph(empty, GraphFormat::EdgeList, {}).find("0 0") != std::string::npos);

  // json round trip through the import path
  auto jp = tmp_file("dg_z6_diff.json");
  export_graph(d, GraphFormat::Json, jp, meta);
  Graph back = import_graph_json(jp);
  CHECK(back.labels() == d.labels());
  CHECK(labeled_edges(back) == labeled_edges(d));
}

TEST_CASE("edgelist reader parses counts and rejects malformed input") {
  auto p = tmp_file("dg_c5.edges");
  {
    std::ofstream f(p);
    f << "# five cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  }
  Graph c5 = read_edgelist(p);
  CHECK(c5.num_vertices() == 5);
  CHECK(c5.num_edges() == 5);

  auto bad = tmp_file("dg_bad.edges");
  {
    std::ofstream f(bad);
    f << "3 2\n0 1\n";
  }
  CHECK_THROWS_AS(read_edgelist(bad), Error);
}

TEST_CASE("graph construction caps are enforced") {
  GraphCaps caps;
  caps.stream_max = 100;
  CHECK_THROWS_AS(build_diff_graph(build_group("sd(Z11,Z10,2)"), caps), Error);
}
