#pragma once

#include <string>
#include <vector>

#include "diffgraph/graph.hpp"
#include "diffgraph/group.hpp"

namespace dg {

// Realization of an input graph as an induced subgraph of D(G) for a
// factored-abelian G. One Z_p x Z_p block per input vertex over distinct
// primes, so |G| is the product of the squared primes (single-vertex input
// maps into Z_6 instead, the smallest group with nonempty difference graph).
struct Embedding {
  std::vector<u64> primes;           // fresh prime per constructed block
  std::vector<u64> moduli;           // group moduli, two per prime
  Group group;
  std::vector<ElementId> vertex_map; // input vertex index -> element of G
};

// Input vertices are the graph indices 0..n-1; at most 12 vertices.
Embedding embed_graph(const Graph& input);

struct EmbedCheck {
  bool ok = true;
  std::vector<std::string> failures;  // one line per violated pair/vertex
};

// Re-checks injectivity, the edge <-> difference-adjacency biconditional
// for every pair, and non-isolation of every image vertex in D(G) (scanned
// over the other images and the single-coordinate prime-order elements).
EmbedCheck verify_embedding(const Embedding& emb, const Graph& input);

}  // namespace dg
