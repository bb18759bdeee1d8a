#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffgraph/graph.hpp"

namespace dg {

// 0 means "no length bound" (search up to the largest possible cycle).
inline constexpr int kHoleUnbounded = 0;

struct HoleSearch {
  std::optional<std::vector<ElementId>> hole;  // labels of an induced odd cycle, length >= 5
  int completed_len = 0;   // every odd length <= this was searched exhaustively
  bool complete = false;   // no hole of any length can exist beyond completed_len
  bool budget_exhausted = false;
  u64 nodes = 0;
};

// Shortest induced odd cycle of length >= 5 up to max_len. Twin classes
// (vertices with identical open or closed neighbourhoods) are collapsed
// first; no induced cycle of length >= 5 can use two twins, so the search
// space shrinks without changing the answer. The core is a canonical-start
// DFS over induced paths: the root is the minimum vertex of the cycle and
// the second vertex is smaller than the closing vertex.
HoleSearch find_odd_hole(const Graph& gr, int max_len = kHoleUnbounded,
                         u64 node_budget = 100'000'000);

struct PerfectOptions {
  // -1: unbounded when |V| <= 64, else max length 11. kHoleUnbounded forces
  // a full search (the node budget still applies).
  int hole_bound = -1;
  u64 node_budget = 100'000'000;
};

struct PerfectVerdict {
  enum class Status { Perfect, Imperfect, BoundedPerfect };
  Status status = Status::Perfect;
  bool witness_in_complement = false;
  std::vector<ElementId> witness;  // odd hole in the graph or its complement
  int bound = 0;                   // hole length actually exhausted
  u64 nodes = 0;
  bool perfect() const { return status == Status::Perfect; }
};

// Strong-perfect-graph route: perfect iff no odd hole in the graph or its
// complement. Requires |V| <= 4096.
PerfectVerdict is_perfect(const Graph& gr, const PerfectOptions& opts = {});

// Independent witness checker: cycle of odd length >= 5, consecutive
// vertices adjacent, all other pairs non-adjacent.
bool verify_hole_witness(const Graph& gr, const std::vector<ElementId>& cycle,
                         std::string* why = nullptr);

// Exact clique and chromatic numbers (branch and bound; |V| <= 2048).
// Throws on budget exhaustion rather than approximating.
int clique_number(const Graph& gr, u64 node_budget = 50'000'000);
bool k_colorable(const Graph& gr, int k, u64 node_budget = 50'000'000);
int chromatic_number(const Graph& gr, u64 node_budget = 50'000'000);

// The four-rule strict order on V(D(G)) for nilpotent groups with exactly
// two prime divisors. Elements split as x = ab with a in the Sylow p-part
// and b in the Sylow q-part (computed from CRT exponents on <x>).
struct ComparabilityOrder {
  u64 p = 0, q = 0;  // p < q
  std::vector<ElementId> vertices;          // V(D(G)), ascending
  std::vector<std::pair<u32, u32>> arrows;  // (i, j) means vertices[i] -> vertices[j]
  bool validate(std::string* why = nullptr) const;  // irreflexive, antisymmetric, transitive
};

ComparabilityOrder build_comparability_order(const Group& g, const GraphCaps& caps = {});

// True iff the symmetric closure of the order equals the edge set of D(G).
bool comparability_matches_diff(const Group& g, std::string* detail = nullptr,
                                const GraphCaps& caps = {});

}  // namespace dg
