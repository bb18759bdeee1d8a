#include "diffgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace dg {

using nlohmann::json;

// ---- Graph ----

Graph Graph::build(std::vector<ElementId> labels, std::vector<std::pair<u32, u32>>& edges,
                   u32 dense_max) {
  Graph gr;
  const u32 n = static_cast<u32>(labels.size());

  // normalize label order; adjacency queries binary-search the label list
  std::vector<u32> perm(n);
  for (u32 i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](u32 a, u32 b) { return labels[a] < labels[b]; });
  std::vector<u32> where(n);
  for (u32 i = 0; i < n; ++i) where[perm[i]] = i;
  std::vector<ElementId> sorted_labels(n);
  for (u32 i = 0; i < n; ++i) sorted_labels[i] = labels[perm[i]];
  for (u32 i = 0; i + 1 < n; ++i)
    if (sorted_labels[i] == sorted_labels[i + 1]) throw Error("graph labels not unique");

  for (auto& e : edges) {
    e.first = where[e.first];
    e.second = where[e.second];
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [](const auto& e) { return e.first == e.second; }),
              edges.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  gr.n_ = n;
  gr.labels_ = std::move(sorted_labels);
  gr.edges_ = edges.size();
  gr.dense_ = n <= dense_max;
  gr.degrees_.assign(n, 0);
  if (gr.dense_) {
    gr.words_ = (n + 63) / 64;
    gr.bits_.assign(static_cast<std::size_t>(n) * gr.words_, 0);
    for (auto& e : edges) {
      gr.bits_[static_cast<std::size_t>(e.first) * gr.words_ + e.second / 64] |= u64(1) << (e.second % 64);
      gr.bits_[static_cast<std::size_t>(e.second) * gr.words_ + e.first / 64] |= u64(1) << (e.first % 64);
      ++gr.degrees_[e.first];
      ++gr.degrees_[e.second];
    }
  } else {
    gr.adj_.assign(n, {});
    for (auto& e : edges) {
      gr.adj_[e.first].push_back(e.second);
      gr.adj_[e.second].push_back(e.first);
    }
    for (u32 i = 0; i < n; ++i) {
      std::sort(gr.adj_[i].begin(), gr.adj_[i].end());
      gr.degrees_[i] = static_cast<u32>(gr.adj_[i].size());
    }
  }
  return gr;
}

bool Graph::adjacent(u32 u, u32 v) const {
  if (u == v) return false;
  if (dense_)
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<u32> Graph::neighbors(u32 u) const {
  std::vector<u32> out;
  out.reserve(degrees_[u]);
  for_each_neighbor(u, [&](u32 v) { out.push_back(v); });
  return out;
}

std::optional<u32> Graph::index_of(ElementId label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<u32>(it - labels_.begin());
}

std::vector<std::pair<u32, u32>> Graph::edge_list() const {
  std::vector<std::pair<u32, u32>> out;
  out.reserve(edges_);
  for (u32 u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](u32 v) {
      if (u < v) out.emplace_back(u, v);
    });
  std::sort(out.begin(), out.end());
  return out;
}

// ---- maximal cyclic subgroups ----

std::vector<std::vector<ElementId>> maximal_cyclic_subgroups(const Group& g) {
  if (!g.enumerable()) throw Error("maximal_cyclic_subgroups requires an enumerable group");
  const u64 n = g.size();
  const ElementId e = g.identity();

  // mark every element that lies properly inside some cyclic subgroup
  std::vector<char> contained(n, 0);
  std::vector<ElementId> walk;
  for (u64 z = 0; z < n; ++z) {
    walk.clear();
    ElementId cur = e;
    do {
      walk.push_back(cur);
      cur = g.mul(cur, z);
    } while (cur != e);
    const u64 m = walk.size();
    for (u64 k = 0; k < m; ++k)
      if (gcd_u64(k, m) != 1) contained[static_cast<u64>(walk[k])] = 1;
  }

  // unmarked elements generate the maximal cyclic subgroups
  std::vector<std::vector<ElementId>> out;
  std::set<std::vector<ElementId>> seen;
  for (u64 z = 0; z < n; ++z) {
    if (contained[z]) continue;
    walk.clear();
    ElementId cur = e;
    do {
      walk.push_back(cur);
      cur = g.mul(cur, z);
    } while (cur != e);
    std::vector<ElementId> key = walk;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(walk);
  }
  return out;
}

namespace {

// Emits every difference edge (a, b) with a < b, possibly repeated across
// subgroups. Inside the walk of z (order m), z^i and z^j are powers of each
// other iff gcd(i,m) | j or gcd(j,m) | i.
template <typename Fn>
void stream_diff_pairs(const Group& g, Fn&& fn) {
  auto walks = maximal_cyclic_subgroups(g);
  std::vector<u64> gcds;
  for (const auto& walk : walks) {
    const u64 m = walk.size();
    gcds.resize(m);
    for (u64 i = 0; i < m; ++i) gcds[i] = gcd_u64(i, m);
    for (u64 i = 1; i < m; ++i)
      for (u64 j = i + 1; j < m; ++j) {
        if (j % gcds[i] == 0 || i % gcds[j] == 0) continue;
        ElementId a = walk[i], b = walk[j];
        if (a > b) std::swap(a, b);
        fn(static_cast<u64>(a), static_cast<u64>(b));
      }
  }
}

void check_materializable(const Group& g, const GraphCaps& caps) {
  if (!g.enumerable()) throw Error("graph construction requires an enumerable group");
  if (g.order() > caps.stream_max)
    throw Error("graph cap exceeded: |G| = " + id_str(g.order()) + " > " +
                std::to_string(caps.stream_max));
}

std::vector<ElementId> all_labels(u64 n) {
  std::vector<ElementId> labels(n);
  for (u64 i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

struct UnionFind {
  std::vector<u32> parent;
  explicit UnionFind(u64 n) : parent(n) {
    for (u64 i = 0; i < n; ++i) parent[i] = static_cast<u32>(i);
  }
  u32 find(u32 x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(u32 a, u32 b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

// ---- graph builders ----

Graph build_pow_graph(const Group& g, const GraphCaps& caps) {
  check_materializable(g, caps);
  const u64 n = g.size();
  const ElementId e = g.identity();
  std::vector<std::pair<u32, u32>> edges;
  for (u64 a = 0; a < n; ++a) {
    ElementId cur = e;
    do {
      if (cur != a) edges.emplace_back(static_cast<u32>(a), static_cast<u32>(cur));
      cur = g.mul(cur, a);
    } while (cur != e);
  }
  return Graph::build(all_labels(n), edges, caps.dense_max);
}

Graph build_epow_graph(const Group& g, const GraphCaps& caps) {
  check_materializable(g, caps);
  const u64 n = g.size();
  std::vector<std::pair<u32, u32>> edges;
  for (const auto& walk : maximal_cyclic_subgroups(g)) {
    const u64 m = walk.size();
    for (u64 i = 0; i < m; ++i)
      for (u64 j = i + 1; j < m; ++j)
        edges.emplace_back(static_cast<u32>(walk[i]), static_cast<u32>(walk[j]));
  }
  return Graph::build(all_labels(n), edges, caps.dense_max);
}

namespace {

Graph diff_graph_dense(const Group& g, const GraphCaps& caps) {
  const u32 n = static_cast<u32>(g.size());
  const u32 words = (n + 63) / 64;
  const ElementId e = g.identity();
  std::vector<u64> pow_bits(static_cast<std::size_t>(n) * words, 0);
  std::vector<u64> epow_bits(static_cast<std::size_t>(n) * words, 0);
  auto set2 = [words](std::vector<u64>& bits, u32 a, u32 b) {
    bits[static_cast<std::size_t>(a) * words + b / 64] |= u64(1) << (b % 64);
    bits[static_cast<std::size_t>(b) * words + a / 64] |= u64(1) << (a % 64);
  };
  for (u32 a = 0; a < n; ++a) {
    ElementId cur = e;
    do {
      if (cur != a) set2(pow_bits, a, static_cast<u32>(cur));
      cur = g.mul(cur, a);
    } while (cur != e);
  }
  for (const auto& walk : maximal_cyclic_subgroups(g)) {
    const u64 m = walk.size();
    for (u64 i = 0; i < m; ++i)
      for (u64 j = i + 1; j < m; ++j)
        set2(epow_bits, static_cast<u32>(walk[i]), static_cast<u32>(walk[j]));
  }
  // difference rows, then drop isolated vertices
  std::vector<ElementId> labels;
  std::vector<std::pair<u32, u32>> edges;
  for (u32 a = 0; a < n; ++a) {
    bool any = false;
    for (u32 w = 0; w < words; ++w) {
      u64 d = epow_bits[static_cast<std::size_t>(a) * words + w] &
              ~pow_bits[static_cast<std::size_t>(a) * words + w];
      if (!d) continue;
      any = true;
      while (d) {
        u32 b = w * 64 + static_cast<u32>(__builtin_ctzll(d));
        d &= d - 1;
        if (a < b) edges.emplace_back(a, b);
      }
    }
    if (any) labels.push_back(a);
  }
  // reindex edges onto the surviving label set
  std::vector<u32> where(n, UINT32_MAX);
  for (u32 i = 0; i < labels.size(); ++i) where[static_cast<u32>(labels[i])] = i;
  for (auto& ed : edges) {
    ed.first = where[ed.first];
    ed.second = where[ed.second];
  }
  return Graph::build(std::move(labels), edges, caps.dense_max);
}

Graph diff_graph_streamed(const Group& g, const GraphCaps& caps) {
  const u64 n = g.size();
  std::vector<u64> packed;
  stream_diff_pairs(g, [&](u64 a, u64 b) { packed.push_back((a << 32) | b); });
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

  std::vector<char> flag(n, 0);
  for (u64 p : packed) {
    flag[p >> 32] = 1;
    flag[p & 0xffffffffULL] = 1;
  }
  std::vector<ElementId> labels;
  std::vector<u32> where(n, UINT32_MAX);
  for (u64 i = 0; i < n; ++i)
    if (flag[i]) {
      where[i] = static_cast<u32>(labels.size());
      labels.push_back(i);
    }
  std::vector<std::pair<u32, u32>> edges;
  edges.reserve(packed.size());
  for (u64 p : packed) edges.emplace_back(where[p >> 32], where[p & 0xffffffffULL]);
  return Graph::build(std::move(labels), edges, caps.dense_max);
}

}  // namespace

Graph build_diff_graph(const Group& g, const GraphCaps& caps) {
  check_materializable(g, caps);
  if (g.backend() == Group::Backend::Cayley && g.size() <= caps.dense_max)
    return diff_graph_dense(g, caps);
  return diff_graph_streamed(g, caps);
}

std::vector<char> diff_vertex_flags(const Group& g) {
  if (!g.enumerable()) throw Error("diff_vertex_flags requires an enumerable group");
  std::vector<char> flags(g.size(), 0);
  stream_diff_pairs(g, [&](u64 a, u64 b) {
    flags[a] = 1;
    flags[b] = 1;
  });
  return flags;
}

DiffComponents diff_components(const Group& g) {
  if (!g.enumerable()) throw Error("diff_components requires an enumerable group");
  const u64 n = g.size();
  UnionFind uf(n);
  std::vector<char> flags(n, 0);
  stream_diff_pairs(g, [&](u64 a, u64 b) {
    flags[a] = 1;
    flags[b] = 1;
    uf.unite(static_cast<u32>(a), static_cast<u32>(b));
  });
  DiffComponents out;
  std::vector<u32> comp_id(n, UINT32_MAX);
  for (u64 i = 0; i < n; ++i) {
    if (!flags[i]) continue;
    u32 root = uf.find(static_cast<u32>(i));
    if (comp_id[root] == UINT32_MAX) {
      comp_id[root] = out.count++;
      out.sizes.push_back(0);
    }
    out.vertices.push_back(i);
    out.component.push_back(comp_id[root]);
    ++out.sizes[comp_id[root]];
  }
  return out;
}

// ---- components, distances, diameter ----

ComponentReport connected_components(const Graph& gr) {
  const u32 n = gr.num_vertices();
  ComponentReport rep;
  rep.comp_of.assign(n, UINT32_MAX);
  for (u32 s = 0; s < n; ++s) {
    if (rep.comp_of[s] != UINT32_MAX) continue;
    u32 c = rep.count++;
    std::vector<ElementId> members;
    std::queue<u32> q;
    q.push(s);
    rep.comp_of[s] = c;
    while (!q.empty()) {
      u32 u = q.front();
      q.pop();
      members.push_back(gr.label(u));
      gr.for_each_neighbor(u, [&](u32 v) {
        if (rep.comp_of[v] == UINT32_MAX) {
          rep.comp_of[v] = c;
          q.push(v);
        }
      });
    }
    std::sort(members.begin(), members.end());
    rep.components.push_back(std::move(members));
  }
  return rep;
}

namespace {

void bfs(const Graph& gr, u32 src, std::vector<u32>& dist, std::vector<u32>& parent) {
  dist.assign(gr.num_vertices(), UINT32_MAX);
  parent.assign(gr.num_vertices(), UINT32_MAX);
  std::queue<u32> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    u32 u = q.front();
    q.pop();
    gr.for_each_neighbor(u, [&](u32 v) {
      if (dist[v] == UINT32_MAX) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push(v);
      }
    });
  }
}

std::vector<ElementId> unwind(const Graph& gr, const std::vector<u32>& parent, u32 from, u32 to) {
  std::vector<ElementId> path;
  for (u32 v = to; v != UINT32_MAX; v = parent[v]) {
    path.push_back(gr.label(v));
    if (v == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

PathResult distance(const Graph& gr, ElementId u, ElementId v) {
  auto iu = gr.index_of(u), iv = gr.index_of(v);
  if (!iu || !iv) throw Error("distance: label not in graph");
  std::vector<u32> dist, parent;
  bfs(gr, *iu, dist, parent);
  PathResult res;
  if (dist[*iv] == UINT32_MAX) return res;
  res.connected = true;
  res.dist = dist[*iv];
  res.path = unwind(gr, parent, *iu, *iv);
  return res;
}

DiameterReport diameter(const Graph& gr, int workers) {
  DiameterReport rep;
  const u32 n = gr.num_vertices();
  if (n == 0) return rep;
  auto comps = connected_components(gr);

  std::vector<u32> ecc(n, 0);
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(n));
  auto run = [&](u32 lo, u32 hi) {
    std::vector<u32> dist, parent;
    for (u32 s = lo; s < hi; ++s) {
      bfs(gr, s, dist, parent);
      u32 e = 0;
      for (u32 v = 0; v < n; ++v)
        if (dist[v] != UINT32_MAX) e = std::max(e, dist[v]);
      ecc[s] = e;
    }
  };
  if (workers == 1) {
    run(0, n);
  } else {
    std::vector<std::thread> pool;
    u32 chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      u32 lo = static_cast<u32>(w) * chunk, hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  rep.component_diameters.assign(comps.count, 0);
  for (u32 v = 0; v < n; ++v)
    rep.component_diameters[comps.comp_of[v]] =
        std::max(rep.component_diameters[comps.comp_of[v]], ecc[v]);

  if (comps.count > 1) {
    rep.finite = false;
    return rep;
  }
  rep.finite = true;
  for (u32 v = 0; v < n; ++v) rep.value = std::max(rep.value, ecc[v]);
  u32 src = 0;
  while (ecc[src] != rep.value) ++src;
  std::vector<u32> dist, parent;
  bfs(gr, src, dist, parent);
  u32 dst = 0;
  while (dist[dst] != rep.value) ++dst;
  rep.from = gr.label(src);
  rep.to = gr.label(dst);
  rep.geodesic = unwind(gr, parent, src, dst);
  return rep;
}

Graph complement(const Graph& gr) {
  const u32 n = gr.num_vertices();
  if (n > GraphCaps{}.dense_max) throw Error("complement capped at dense size");
  std::vector<std::pair<u32, u32>> edges;
  for (u32 u = 0; u < n; ++u)
    for (u32 v = u + 1; v < n; ++v)
      if (!gr.adjacent(u, v)) edges.emplace_back(u, v);
  std::vector<ElementId> labels(gr.labels());
  return Graph::build(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& gr, const std::vector<ElementId>& keep) {
  std::vector<u32> idx;
  for (ElementId l : keep)
    if (auto i = gr.index_of(l)) idx.push_back(*i);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<u32> where(gr.num_vertices(), UINT32_MAX);
  std::vector<ElementId> labels;
  for (u32 i = 0; i < idx.size(); ++i) {
    where[idx[i]] = i;
    labels.push_back(gr.label(idx[i]));
  }
  std::vector<std::pair<u32, u32>> edges;
  for (u32 u : idx)
    gr.for_each_neighbor(u, [&](u32 v) {
      if (u < v && where[v] != UINT32_MAX) edges.emplace_back(where[u], where[v]);
    });
  return Graph::build(std::move(labels), edges);
}

// ---- export / import ----

namespace {

std::string vertex_desc(const Graph& gr, u32 i, const GraphMeta& meta) {
  if (meta.describe_with) return meta.describe_with->describe(gr.label(i));
  return id_str(gr.label(i));
}

}  // namespace

std::string render_graph(const Graph& gr, GraphFormat format, const GraphMeta& meta) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::Dot: {
      out << "graph \"" << (meta.kind.empty() ? "graph" : meta.kind);
      if (!meta.group.empty()) out << " of " << meta.group;
      out << "\" {\n";
      for (u32 i = 0; i < gr.num_vertices(); ++i)
        out << "  v" << i << " [label=\"" << vertex_desc(gr, i, meta) << "\"];\n";
      for (auto& [u, v] : gr.edge_list()) out << "  v" << u << " -- v" << v << ";\n";
      out << "}\n";
      break;
    }
    case GraphFormat::EdgeList: {
      if (!meta.group.empty()) out << "# group " << meta.group << "\n";
      if (!meta.kind.empty()) out << "# kind " << meta.kind << "\n";
      for (u32 i = 0; i < gr.num_vertices(); ++i)
        out << "# vertex " << i << " " << id_str(gr.label(i)) << " " << vertex_desc(gr, i, meta)
            << "\n";
      out << gr.num_vertices() << " " << gr.num_edges() << "\n";
      for (auto& [u, v] : gr.edge_list()) out << u << " " << v << "\n";
      break;
    }
    case GraphFormat::Json: {
      json j;
      j["group"] = meta.group;
      j["kind"] = meta.kind;
      json verts = json::array();
      for (u32 i = 0; i < gr.num_vertices(); ++i) {
        json v;
        v["id"] = id_str(gr.label(i));
        v["desc"] = vertex_desc(gr, i, meta);
        verts.push_back(v);
      }
      j["vertices"] = std::move(verts);
      json edges = json::array();
      for (auto& [u, v] : gr.edge_list()) edges.push_back(json::array({u, v}));
      j["edges"] = std::move(edges);
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

void export_graph(const Graph& gr, GraphFormat format, const std::filesystem::path& path,
                  const GraphMeta& meta) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  f << render_graph(gr, format, meta);
  if (!f) throw Error("write failed: " + path.string());
}

Graph import_graph_json(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path.string());
  json j;
  f >> j;
  std::vector<ElementId> labels;
  for (auto& v : j.at("vertices")) labels.push_back(id_parse(v.at("id").get<std::string>()));
  std::vector<std::pair<u32, u32>> edges;
  for (auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<u32>(), e.at(1).get<u32>());
  return Graph::build(std::move(labels), edges);
}

Graph read_edgelist(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path.string());
  std::vector<u64> nums;
  std::string line;
  while (std::getline(f, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    u64 v;
    while (ls >> v) nums.push_back(v);
  }
  if (nums.size() < 2) throw Error("edgelist: missing header counts");
  u64 n = nums[0], m = nums[1];
  if (nums.size() != 2 + 2 * m) throw Error("edgelist: edge count mismatch");
  std::vector<std::pair<u32, u32>> edges;
  for (u64 i = 0; i < m; ++i) {
    u64 a = nums[2 + 2 * i], b = nums[3 + 2 * i];
    if (a >= n || b >= n) throw Error("edgelist: vertex out of range");
    edges.emplace_back(static_cast<u32>(a), static_cast<u32>(b));
  }
  std::vector<ElementId> labels(n);
  for (u64 i = 0; i < n; ++i) labels[i] = i;
  return Graph::build(std::move(labels), edges);
}

}  // namespace dg
