#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diffgraph/group.hpp"

namespace dg {

struct GraphCaps {
  u32 dense_max = 4096;    // dense bit-matrix up to here, adjacency lists above
  u32 stream_max = 50000;  // vertex cap for materialized graph construction
};

// Labeled undirected graph. Vertices are indexed 0..n-1 with unique,
// ascending ElementId labels; adjacency is a dense symmetric bit-matrix for
// small n and sorted adjacency lists above the threshold.
class Graph {
 public:
  Graph() = default;
  // Edges are index pairs; duplicates and self-loops are dropped.
  static Graph build(std::vector<ElementId> labels, std::vector<std::pair<u32, u32>>& edges,
                     u32 dense_max = GraphCaps{}.dense_max);

  u32 num_vertices() const { return n_; }
  u64 num_edges() const { return edges_; }
  bool is_dense() const { return dense_; }

  bool adjacent(u32 u, u32 v) const;
  u32 degree(u32 u) const { return degrees_[u]; }
  std::vector<u32> neighbors(u32 u) const;

  template <typename F>
  void for_each_neighbor(u32 u, F&& f) const {
    if (dense_) {
      const u64* row = bits_.data() + static_cast<std::size_t>(u) * words_;
      for (u32 w = 0; w < words_; ++w) {
        u64 m = row[w];
        while (m) {
          u32 v = w * 64 + static_cast<u32>(__builtin_ctzll(m));
          f(v);
          m &= m - 1;
        }
      }
    } else {
      for (u32 v : adj_[u]) f(v);
    }
  }

  ElementId label(u32 idx) const { return labels_[idx]; }
  const std::vector<ElementId>& labels() const { return labels_; }
  std::optional<u32> index_of(ElementId label) const;

  std::vector<std::pair<u32, u32>> edge_list() const;  // u < v, ascending

 private:
  u32 n_ = 0;
  u64 edges_ = 0;
  bool dense_ = true;
  u32 words_ = 0;
  std::vector<ElementId> labels_;
  std::vector<u64> bits_;
  std::vector<std::vector<u32>> adj_;
  std::vector<u32> degrees_;
};

// Pow(G): a ~ b iff one is a power of the other; vertex set is all of G.
Graph build_pow_graph(const Group& g, const GraphCaps& caps = {});
// EPow(G): a ~ b iff <a,b> is cyclic; built by clique-marking the maximal
// cyclic subgroups.
Graph build_epow_graph(const Group& g, const GraphCaps& caps = {});
// D(G) = EPow(G) - Pow(G) with isolated vertices removed. Cayley-backed
// groups within the dense cap go through matrix subtraction; everything
// else streams edges per maximal cyclic subgroup with the power edges
// filtered on exponents.
Graph build_diff_graph(const Group& g, const GraphCaps& caps = {});

// Flags[id] = element is incident to at least one difference edge. Streams
// without materializing anything per-edge.
std::vector<char> diff_vertex_flags(const Group& g);

// Union-find over the streamed difference edges: connectivity of D(G)
// without building the graph.
struct DiffComponents {
  std::vector<ElementId> vertices;     // non-isolated elements, ascending
  std::vector<u32> component;          // per vertex, 0-based by smallest member
  u32 count = 0;
  std::vector<u64> sizes;              // per component
};
DiffComponents diff_components(const Group& g);

// The z^0..z^{m-1} walks of the maximal cyclic subgroups, deduplicated.
std::vector<std::vector<ElementId>> maximal_cyclic_subgroups(const Group& g);

struct ComponentReport {
  u32 count = 0;
  std::vector<std::vector<ElementId>> components;  // ordered by smallest label
  std::vector<u32> comp_of;                        // per vertex index
};
ComponentReport connected_components(const Graph& gr);

struct PathResult {
  bool connected = false;
  u32 dist = 0;
  std::vector<ElementId> path;  // from u to v inclusive when connected
};
PathResult distance(const Graph& gr, ElementId u, ElementId v);

struct DiameterReport {
  bool finite = true;
  u32 value = 0;                        // max eccentricity when finite
  std::vector<u32> component_diameters; // per component, same order as report
  ElementId from = 0, to = 0;
  std::vector<ElementId> geodesic;      // a witness path realizing the max
};
DiameterReport diameter(const Graph& gr, int workers = 0);

Graph complement(const Graph& gr);  // requires dense size
Graph induced_subgraph(const Graph& gr, const std::vector<ElementId>& keep);

enum class GraphFormat { Dot, EdgeList, Json };

struct GraphMeta {
  std::string group;
  std::string kind;
  const Group* describe_with = nullptr;
};

void export_graph(const Graph& gr, GraphFormat format, const std::filesystem::path& path,
                  const GraphMeta& meta = {});
std::string render_graph(const Graph& gr, GraphFormat format, const GraphMeta& meta = {});
Graph import_graph_json(const std::filesystem::path& path);

// Edgelist reader (the embed input format): first non-comment line
// "<V> <E>", then E lines "u v" of 0-based vertex indices.
Graph read_edgelist(const std::filesystem::path& path);

}  // namespace dg
