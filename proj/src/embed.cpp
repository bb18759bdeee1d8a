#include "diffgraph/embed.hpp"

#include <algorithm>

#include "diffgraph/adjacency.hpp"

namespace dg {

namespace {

constexpr u32 kMaxVertices = 12;

Embedding embed_single_vertex() {
  Embedding emb{{}, {6}, build_group(GroupSpec::cyclic(6)), {ElementId(2)}};
  return emb;
}

// Edgeless graphs break the inductive map (the first vertex's image ends up
// isolated), so they use n generators of distinct order-p subgroups of the
// last Z_p x Z_p block instead; the block count, and with it |G|, stays the
// same.
Embedding embed_edgeless(const Graph& input) {
  const u32 n = input.num_vertices();
  Embedding emb{{}, {}, build_group(GroupSpec::cyclic(1)), {}};
  for (u32 k = 1; k <= n; ++k) {
    u64 p = nth_prime(k);
    emb.primes.push_back(p);
    emb.moduli.push_back(p);
    emb.moduli.push_back(p);
  }
  std::vector<GroupSpec> factors;
  for (u64 m : emb.moduli) factors.push_back(GroupSpec::cyclic(m));
  emb.group = build_group(GroupSpec::product(std::move(factors)));

  const u64 pn = emb.primes.back();
  if (pn < n) throw Error("not enough subgroups in the last block");  // p_n >= n+1 always
  for (u32 v = 0; v < n; ++v) {
    std::vector<u64> tuple(2 * n, 0);
    if (v == 0) {
      tuple[2 * n - 1] = 1;  // <(0,1)>
    } else {
      tuple[2 * n - 2] = 1;  // <(1, v-1)>
      tuple[2 * n - 1] = v - 1;
    }
    emb.vertex_map.push_back(emb.group.from_tuple(tuple));
  }
  return emb;
}

}  // namespace

Embedding embed_graph(const Graph& input) {
  const u32 n = input.num_vertices();
  if (n == 0) throw Error("embed_graph: empty input graph");
  if (n > kMaxVertices)
    throw Error("embed_graph capped at " + std::to_string(kMaxVertices) + " vertices");
  if (n == 1) return embed_single_vertex();
  if (input.num_edges() == 0) return embed_edgeless(input);

  // Processing order: some positive-degree vertex first (its image then has
  // a neighbour among the later images), everything else ascending.
  u32 first = 0;
  while (input.degree(first) == 0) ++first;
  std::vector<u32> order;
  order.push_back(first);
  for (u32 v = 0; v < n; ++v)
    if (v != first) order.push_back(v);
  std::vector<u32> step_of(n);
  for (u32 k = 0; k < n; ++k) step_of[order[k]] = k;

  Embedding emb{{}, {}, build_group(GroupSpec::cyclic(1)), {}};
  for (u32 k = 1; k <= n; ++k) {
    u64 p = nth_prime(k);
    emb.primes.push_back(p);
    emb.moduli.push_back(p);
    emb.moduli.push_back(p);
  }
  std::vector<GroupSpec> factors;
  for (u64 m : emb.moduli) factors.push_back(GroupSpec::cyclic(m));
  emb.group = build_group(GroupSpec::product(std::move(factors)));

  // Vertex v, placed at step s: block s holds b = (0,1); blocks of later
  // vertices u hold e' = (0,0) when u ~ v and a = (1,0) otherwise; earlier
  // blocks stay zero.
  emb.vertex_map.assign(n, 0);
  for (u32 v = 0; v < n; ++v) {
    std::vector<u64> tuple(2 * n, 0);
    tuple[2 * step_of[v] + 1] = 1;
    for (u32 u = 0; u < n; ++u) {
      if (u == v || step_of[u] < step_of[v]) continue;
      if (!input.adjacent(u, v)) tuple[2 * step_of[u]] = 1;
    }
    emb.vertex_map[v] = emb.group.from_tuple(tuple);
  }
  return emb;
}

EmbedCheck verify_embedding(const Embedding& emb, const Graph& input) {
  EmbedCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  const u32 n = input.num_vertices();
  if (emb.vertex_map.size() != n) {
    fail("vertex map arity mismatch");
    return check;
  }
  const Group& g = emb.group;

  std::vector<ElementId> sorted = emb.vertex_map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail("vertex map is not injective");

  for (u32 u = 0; u < n; ++u)
    for (u32 v = u + 1; v < n; ++v) {
      bool edge = input.adjacent(u, v);
      bool adj = diff_adjacent(g, emb.vertex_map[u], emb.vertex_map[v]);
      if (edge != adj)
        fail("pair (" + std::to_string(u) + "," + std::to_string(v) + "): edge=" +
             (edge ? "1" : "0") + " but diff-adjacency=" + (adj ? "1" : "0"));
    }

  // non-isolation: the image must be a vertex of D(G), i.e. have some
  // difference neighbour; single-coordinate elements of prime order cover
  // the zero blocks
  std::vector<ElementId> candidates = emb.vertex_map;
  const auto& moduli = g.moduli();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (u64 p : prime_factors(moduli[i])) {
      std::vector<u64> tuple(moduli.size(), 0);
      tuple[i] = moduli[i] / p;
      candidates.push_back(g.from_tuple(tuple));
    }
  }
  for (u32 v = 0; v < n; ++v) {
    bool has_neighbor = false;
    for (ElementId c : candidates)
      if (c != emb.vertex_map[v] && diff_adjacent(g, emb.vertex_map[v], c)) {
        has_neighbor = true;
        break;
      }
    if (!has_neighbor)
      fail("image of vertex " + std::to_string(v) + " is isolated in the difference graph");
  }
  return check;
}

}  // namespace dg
