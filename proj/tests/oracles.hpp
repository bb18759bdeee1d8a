#pragma once

// Test-local brute-force oracles. These deliberately take the slow,
// definitional route so the optimized library paths have something
// independent to be checked against.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "diffgraph/group.hpp"

namespace oracle {

using dg::ElementId;
using dg::u64;

// Full <z>-scan adjacency matrices: pow from "a is a power of b or b of a",
// epow from "some z has both a and b as powers" (the definitions verbatim).
struct PairMatrices {
  u64 n = 0;
  std::vector<char> pow, epow, diff;  // n*n, no self loops

  bool at(const std::vector<char>& m, u64 a, u64 b) const { return m[a * n + b]; }
};

inline PairMatrices pair_matrices(const dg::Group& g) {
  PairMatrices m;
  m.n = g.size();
  m.pow.assign(m.n * m.n, 0);
  m.epow.assign(m.n * m.n, 0);
  m.diff.assign(m.n * m.n, 0);
  for (u64 z = 0; z < m.n; ++z) {
    std::vector<u64> members;
    ElementId e = g.identity(), cur = e;
    do {
      members.push_back(static_cast<u64>(cur));
      cur = g.mul(cur, z);
    } while (cur != e);
    for (u64 a : members) {
      if (a != z) {
        m.pow[z * m.n + a] = 1;
        m.pow[a * m.n + z] = 1;
      }
      for (u64 b : members)
        if (a != b) m.epow[a * m.n + b] = 1;
    }
  }
  for (u64 a = 0; a < m.n; ++a)
    for (u64 b = 0; b < m.n; ++b)
      m.diff[a * m.n + b] = m.epow[a * m.n + b] && !m.pow[a * m.n + b];
  return m;
}

// ---- tiny permutation arithmetic, independent of the library's ranking ----

using PermVec = std::vector<int>;

inline PermVec pcompose(const PermVec& a, const PermVec& b) {  // (a*b)(i) = a(b(i))
  PermVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline bool pidentity(const PermVec& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline u64 porder(const PermVec& p) {
  PermVec cur = p;
  u64 k = 1;
  while (!pidentity(cur)) {
    cur = pcompose(cur, p);
    ++k;
  }
  return k;
}

// order multiset of S_n via next_permutation
inline std::map<u64, u64> sym_order_histogram(int n) {
  PermVec p(n);
  std::iota(p.begin(), p.end(), 0);
  std::map<u64, u64> hist;
  do {
    ++hist[porder(p)];
  } while (std::next_permutation(p.begin(), p.end()));
  return hist;
}

// ---- small-graph exact omega / chi / perfection ----

struct SmallGraph {
  int n = 0;
  std::vector<char> adj;  // n*n
  bool at(int a, int b) const { return adj[static_cast<std::size_t>(a) * n + b]; }
  void add(int a, int b) {
    adj[static_cast<std::size_t>(a) * n + b] = 1;
    adj[static_cast<std::size_t>(b) * n + a] = 1;
  }
};

inline SmallGraph small_graph(int n) {
  SmallGraph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n) * n, 0);
  return g;
}

inline int omega_of_mask(const SmallGraph& g, unsigned mask) {
  int best = 0;
  for (unsigned s = mask;; s = (s - 1) & mask) {
    bool clique = true;
    for (int a = 0; a < g.n && clique; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = a + 1; b < g.n; ++b)
        if ((s >> b & 1) && !g.at(a, b)) {
          clique = false;
          break;
        }
    }
    if (clique) best = std::max(best, __builtin_popcount(s));
    if (s == 0) break;
  }
  return best;
}

inline bool colorable_mask(const SmallGraph& g, unsigned mask, int k, std::vector<int>& col, int v) {
  while (v < g.n && !(mask >> v & 1)) ++v;
  if (v >= g.n) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if ((mask >> u & 1) && g.at(u, v) && col[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    col[v] = c;
    if (colorable_mask(g, mask, k, col, v + 1)) return true;
  }
  col[v] = -1;
  return false;
}

inline int chi_of_mask(const SmallGraph& g, unsigned mask) {
  if (mask == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> col(g.n, -1);
    if (colorable_mask(g, mask, k, col, 0)) return k;
  }
}

// perfection by definition: chi(H) = omega(H) for every induced subgraph
inline bool perfect_by_definition(const SmallGraph& g) {
  for (unsigned mask = 0; mask < (1u << g.n); ++mask)
    if (omega_of_mask(g, mask) != chi_of_mask(g, mask)) return false;
  return true;
}

}  // namespace oracle
