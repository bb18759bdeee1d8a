#include "diffgraph/perfect.hpp"

#include <algorithm>
#include <map>

#include "diffgraph/group.hpp"

namespace dg {

namespace {

struct Bitmat {
  u32 n = 0, words = 0;
  std::vector<u64> bits;

  void init(u32 n_) {
    n = n_;
    words = (n + 63) / 64;
    bits.assign(static_cast<std::size_t>(n) * words, 0);
  }
  u64* row(u32 u) { return bits.data() + static_cast<std::size_t>(u) * words; }
  const u64* row(u32 u) const { return bits.data() + static_cast<std::size_t>(u) * words; }
  bool get(u32 u, u32 v) const { return (row(u)[v / 64] >> (v % 64)) & 1; }
  void set_sym(u32 u, u32 v) {
    row(u)[v / 64] |= u64(1) << (v % 64);
    row(v)[u / 64] |= u64(1) << (u % 64);
  }
};

Bitmat to_bitmat(const Graph& gr) {
  if (gr.num_vertices() > 8192) throw Error("hole search capped at 8192 vertices");
  Bitmat m;
  m.init(gr.num_vertices());
  for (u32 u = 0; u < gr.num_vertices(); ++u)
    gr.for_each_neighbor(u, [&](u32 v) {
      if (u < v) m.set_sym(u, v);
    });
  return m;
}

// Collapse twin classes: vertices with identical open neighbourhoods or
// identical closed neighbourhoods (within the surviving set) cannot both
// lie on an induced cycle of length >= 5, so each class keeps only its
// smallest member. Iterates to a fixpoint.
std::vector<u32> twin_reduce(const Bitmat& m) {
  const u32 W = m.words;
  std::vector<char> alive(m.n, 1);
  std::vector<u64> mask(W, 0);
  for (u32 v = 0; v < m.n; ++v) mask[v / 64] |= u64(1) << (v % 64);

  bool changed = true;
  std::vector<u64> key;
  while (changed) {
    changed = false;
    std::map<std::vector<u64>, u32> seen;
    for (u32 v = 0; v < m.n; ++v) {
      if (!alive[v]) continue;
      key.assign(W, 0);
      const u64* row = m.row(v);
      for (u32 w = 0; w < W; ++w) key[w] = row[w] & mask[w];
      // open key, then closed key with the vertex bit added
      auto [it, inserted] = seen.emplace(key, v);
      if (!inserted) {
        alive[v] = 0;
        changed = true;
        continue;
      }
      key[v / 64] |= u64(1) << (v % 64);
      auto [it2, inserted2] = seen.emplace(key, v);
      if (!inserted2 && it2->second != v) {
        alive[v] = 0;
        changed = true;
        seen.erase(it);
      }
    }
    if (changed) {
      for (u32 w = 0; w < W; ++w) mask[w] = 0;
      for (u32 v = 0; v < m.n; ++v)
        if (alive[v]) mask[v / 64] |= u64(1) << (v % 64);
    }
  }
  std::vector<u32> kept;
  for (u32 v = 0; v < m.n; ++v)
    if (alive[v]) kept.push_back(v);
  return kept;
}

// DFS for an induced cycle of exact length L with canonical start: the root
// is the cycle minimum and the second vertex is below the closing vertex.
struct HoleDfs {
  const Bitmat& m;
  int L;
  u64 budget;
  u64 nodes = 0;
  bool exhausted = false;
  std::vector<u32> path;
  std::vector<std::vector<u64>> A;  // A[k] = union of N(c_0..c_{k-1})
  std::vector<std::vector<u64>> B;  // B[k] = union of N(c_1..c_{k-1})
  std::vector<u64> low;             // bits 0..root
  std::vector<u32> found;

  HoleDfs(const Bitmat& mat, int len, u64 nb) : m(mat), L(len), budget(nb) {
    A.assign(L + 1, std::vector<u64>(m.words, 0));
    B.assign(L + 1, std::vector<u64>(m.words, 0));
    low.assign(m.words, 0);
  }

  bool run() {
    for (u32 s = 0; s + static_cast<u32>(L) <= m.n + 0u && s < m.n; ++s) {
      for (u32 w = 0; w < m.words; ++w) low[w] = 0;
      for (u32 v = 0; v <= s; ++v) low[v / 64] |= u64(1) << (v % 64);
      path.assign(1, s);
      for (auto& w : A[0]) w = 0;
      for (auto& w : B[0]) w = 0;
      if (extend(0)) return true;
      if (exhausted) return false;
    }
    return false;
  }

  bool extend(int k) {
    const u32 ck = path[static_cast<std::size_t>(k)];
    const u64* nk = m.row(ck);
    // A_{k+1}, B_{k+1} depend only on the prefix
    for (u32 w = 0; w < m.words; ++w) A[k + 1][w] = A[k][w] | nk[w];
    if (k >= 1)
      for (u32 w = 0; w < m.words; ++w) B[k + 1][w] = B[k][w] | nk[w];

    if (k == L - 2) {
      // closing vertex: adjacent to both ends, independent of the interior,
      // above the root, above the second vertex
      const u64* n0 = m.row(path[0]);
      const u32 c1 = path[1];
      for (u32 w = 0; w < m.words; ++w) {
        u64 cand = nk[w] & n0[w] & ~B[k][w] & ~low[w];
        while (cand) {
          u32 v = w * 64 + static_cast<u32>(__builtin_ctzll(cand));
          cand &= cand - 1;
          if (++nodes > budget) {
            exhausted = true;
            return false;
          }
          if (v <= c1) continue;
          found = path;
          found.push_back(v);
          return true;
        }
      }
      return false;
    }

    for (u32 w = 0; w < m.words; ++w) {
      u64 cand = nk[w] & ~A[k][w] & ~low[w];
      while (cand) {
        u32 v = w * 64 + static_cast<u32>(__builtin_ctzll(cand));
        cand &= cand - 1;
        if (++nodes > budget) {
          exhausted = true;
          return false;
        }
        path.push_back(v);
        if (extend(k + 1)) return true;
        path.pop_back();
        if (exhausted) return false;
      }
    }
    return false;
  }
};

}  // namespace

HoleSearch find_odd_hole(const Graph& gr, int max_len, u64 node_budget) {
  HoleSearch res;
  const u32 n = gr.num_vertices();
  if (n < 5) {
    res.complete = true;
    res.completed_len = 3;
    return res;
  }
  Bitmat full = to_bitmat(gr);
  std::vector<u32> kept = twin_reduce(full);
  const u32 r = static_cast<u32>(kept.size());
  Bitmat m;
  m.init(r);
  for (u32 i = 0; i < r; ++i)
    for (u32 j = i + 1; j < r; ++j)
      if (full.get(kept[i], kept[j])) m.set_sym(i, j);

  int longest = static_cast<int>(r);
  if (longest % 2 == 0) --longest;
  int target = (max_len == kHoleUnbounded) ? longest : std::min(max_len, longest);
  if (target % 2 == 0) --target;

  u64 used = 0;
  res.completed_len = 3;
  for (int L = 5; L <= target; L += 2) {
    HoleDfs dfs(m, L, node_budget > used ? node_budget - used : 0);
    bool hit = dfs.run();
    used += dfs.nodes;
    res.nodes = used;
    if (hit) {
      std::vector<ElementId> labels;
      for (u32 idx : dfs.found) labels.push_back(gr.label(kept[idx]));
      res.hole = std::move(labels);
      return res;
    }
    if (dfs.exhausted) {
      res.budget_exhausted = true;
      return res;
    }
    res.completed_len = L;
  }
  res.complete = (target >= longest);
  return res;
}

PerfectVerdict is_perfect(const Graph& gr, const PerfectOptions& opts) {
  if (gr.num_vertices() > 4096) throw Error("is_perfect capped at 4096 vertices");
  int bound = opts.hole_bound;
  if (bound == -1) bound = gr.num_vertices() <= 64 ? kHoleUnbounded : 11;

  PerfectVerdict v;
  HoleSearch a = find_odd_hole(gr, bound, opts.node_budget);
  v.nodes = a.nodes;
  if (a.hole) {
    v.status = PerfectVerdict::Status::Imperfect;
    v.witness = *a.hole;
    v.witness_in_complement = false;
    return v;
  }
  Graph comp = complement(gr);
  HoleSearch b = find_odd_hole(comp, bound, opts.node_budget);
  v.nodes += b.nodes;
  if (b.hole) {
    v.status = PerfectVerdict::Status::Imperfect;
    v.witness = *b.hole;
    v.witness_in_complement = true;
    return v;
  }
  v.bound = std::min(a.completed_len, b.completed_len);
  v.status = (a.complete && b.complete) ? PerfectVerdict::Status::Perfect
                                        : PerfectVerdict::Status::BoundedPerfect;
  return v;
}

bool verify_hole_witness(const Graph& gr, const std::vector<ElementId>& cycle, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t L = cycle.size();
  if (L < 5) return fail("cycle shorter than 5");
  if (L % 2 == 0) return fail("cycle has even length");
  std::vector<u32> idx;
  for (ElementId l : cycle) {
    auto i = gr.index_of(l);
    if (!i) return fail("vertex " + id_str(l) + " not in graph");
    idx.push_back(*i);
  }
  std::vector<u32> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail("repeated vertex");
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == L - 1);
      bool adj = gr.adjacent(idx[i], idx[j]);
      if (consecutive && !adj)
        return fail("missing cycle edge " + std::to_string(i) + "-" + std::to_string(j));
      if (!consecutive && adj)
        return fail("chord " + std::to_string(i) + "-" + std::to_string(j));
    }
  }
  return true;
}

// ---- exact clique and coloring ----

namespace {

struct CliqueSolver {
  const Bitmat& m;
  u64 budget, nodes = 0;
  int best = 0;

  explicit CliqueSolver(const Bitmat& mat, u64 nb) : m(mat), budget(nb) {}

  void expand(std::vector<u64>& P, int size) {
    if (++nodes > budget) throw Error("clique_number: node budget exceeded");
    // greedy colouring of P gives both the search order and the bound
    std::vector<u32> verts;
    for (u32 w = 0; w < m.words; ++w) {
      u64 x = P[w];
      while (x) {
        verts.push_back(w * 64 + static_cast<u32>(__builtin_ctzll(x)));
        x &= x - 1;
      }
    }
    if (verts.empty()) {
      best = std::max(best, size);
      return;
    }
    std::vector<std::vector<u64>> classes;
    std::vector<int> color(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      u32 v = verts[i];
      const u64* rv = m.row(v);
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (u32 w = 0; w < m.words; ++w)
          if (classes[c][w] & rv[w]) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back(m.words, 0);
      classes[c][v / 64] |= u64(1) << (v % 64);
      color[i] = static_cast<int>(c) + 1;
    }
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<u64> sub(m.words);
    for (std::size_t oi = order.size(); oi-- > 0;) {
      std::size_t i = order[oi];
      if (size + color[i] <= best) return;
      u32 v = verts[i];
      const u64* rv = m.row(v);
      bool empty = true;
      for (u32 w = 0; w < m.words; ++w) {
        sub[w] = P[w] & rv[w];
        if (sub[w]) empty = false;
      }
      if (empty)
        best = std::max(best, size + 1);
      else {
        std::vector<u64> sub_copy = sub;
        expand(sub_copy, size + 1);
      }
      P[v / 64] &= ~(u64(1) << (v % 64));
    }
  }
};

struct ColorSolver {
  const Bitmat& m;
  int k;
  u64 budget, nodes = 0;
  std::vector<int> color;      // -1 = uncolored
  std::vector<u64> sat;        // colors used by neighbours (k <= 64)
  std::vector<u32> degree;

  ColorSolver(const Bitmat& mat, int kk, u64 nb) : m(mat), k(kk), budget(nb) {
    color.assign(m.n, -1);
    sat.assign(m.n, 0);
    degree.assign(m.n, 0);
    for (u32 v = 0; v < m.n; ++v) {
      u32 d = 0;
      for (u32 w = 0; w < m.words; ++w) d += static_cast<u32>(__builtin_popcountll(m.row(v)[w]));
      degree[v] = d;
    }
  }

  bool solve(u32 colored, int used) {
    if (++nodes > budget) throw Error("coloring: node budget exceeded");
    if (colored == m.n) return true;
    // DSATUR: max saturation, then max degree, then min index
    u32 pick = UINT32_MAX;
    int best_sat = -1;
    u32 best_deg = 0;
    for (u32 v = 0; v < m.n; ++v) {
      if (color[v] >= 0) continue;
      int s = __builtin_popcountll(sat[v]);
      if (s > best_sat || (s == best_sat && degree[v] > best_deg)) {
        best_sat = s;
        best_deg = degree[v];
        pick = v;
      }
    }
    int limit = std::min(k, used + 1);  // at most one brand-new color
    for (int c = 0; c < limit; ++c) {
      if ((sat[pick] >> c) & 1) continue;
      color[pick] = c;
      std::vector<std::pair<u32, u64>> touched;
      const u64* rv = m.row(pick);
      for (u32 w = 0; w < m.words; ++w) {
        u64 x = rv[w];
        while (x) {
          u32 u = w * 64 + static_cast<u32>(__builtin_ctzll(x));
          x &= x - 1;
          if (!((sat[u] >> c) & 1)) {
            touched.emplace_back(u, sat[u]);
            sat[u] |= u64(1) << c;
          }
        }
      }
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      for (auto& [u, old] : touched) sat[u] = old;
      color[pick] = -1;
    }
    return false;
  }
};

}  // namespace

int clique_number(const Graph& gr, u64 node_budget) {
  if (gr.num_vertices() > 2048) throw Error("clique_number capped at 2048 vertices");
  if (gr.num_vertices() == 0) return 0;
  Bitmat m = to_bitmat(gr);
  CliqueSolver solver(m, node_budget);
  std::vector<u64> P(m.words, 0);
  for (u32 v = 0; v < m.n; ++v) P[v / 64] |= u64(1) << (v % 64);
  solver.expand(P, 0);
  return solver.best;
}

bool k_colorable(const Graph& gr, int k, u64 node_budget) {
  if (gr.num_vertices() > 2048) throw Error("coloring capped at 2048 vertices");
  if (k < 0) return gr.num_vertices() == 0;
  if (k > 64) throw Error("coloring capped at 64 colors");
  if (gr.num_vertices() == 0) return true;
  if (k == 0) return false;
  Bitmat m = to_bitmat(gr);
  ColorSolver solver(m, k, node_budget);
  return solver.solve(0, 0);
}

int chromatic_number(const Graph& gr, u64 node_budget) {
  if (gr.num_vertices() == 0) return 0;
  int k = clique_number(gr, node_budget);
  while (!k_colorable(gr, k, node_budget)) ++k;
  return k;
}

// ---- comparability order for nilpotent groups with two primes ----

namespace {

struct SylowSplit {
  bool type1_p = false, type1_q = false;  // pure p-power / q-power order
  std::vector<ElementId> sub_a;           // <a>, sorted (p-part)
  std::vector<ElementId> sub_b;           // <b>, sorted (q-part)
  u64 oa = 1, ob = 1;
};

bool sub_leq(const std::vector<ElementId>& small, u64 osmall, const std::vector<ElementId>& big,
             u64 obig, bool* strict) {
  // <small> <= <big> iff the generator of small lies in big
  (void)osmall;
  (void)obig;
  if (small.size() > big.size()) return false;
  for (ElementId x : small)
    if (!std::binary_search(big.begin(), big.end(), x)) return false;
  if (strict) *strict = small.size() < big.size();
  return true;
}

}  // namespace

ComparabilityOrder build_comparability_order(const Group& g, const GraphCaps& caps) {
  auto pd = g.prime_divisors();
  if (pd.size() != 2) throw Error("comparability order needs exactly two prime divisors");
  if (!g.is_nilpotent()) throw Error("comparability order needs a nilpotent group");
  ComparabilityOrder ord;
  ord.p = pd[0];
  ord.q = pd[1];

  Graph d = build_diff_graph(g, caps);
  ord.vertices = d.labels();
  const u32 n = static_cast<u32>(ord.vertices.size());

  std::vector<SylowSplit> split(n);
  for (u32 i = 0; i < n; ++i) {
    ElementId x = ord.vertices[i];
    u64 ox = g.order_of(x);
    u64 pa = 1, qb = 1, rest = ox;
    while (rest % ord.p == 0) {
      pa *= ord.p;
      rest /= ord.p;
    }
    while (rest % ord.q == 0) {
      qb *= ord.q;
      rest /= ord.q;
    }
    if (rest != 1) throw Error("element order has a third prime divisor");
    SylowSplit& s = split[i];
    s.oa = pa;
    s.ob = qb;
    ElementId a, b;
    if (qb == 1) {
      a = x;
      b = g.identity();
      s.type1_p = true;
    } else if (pa == 1) {
      a = g.identity();
      b = x;
      s.type1_q = true;
    } else {
      // CRT exponents: k_p = 1 mod p^alpha, 0 mod q^beta picks out the p-part
      u64 kp = qb * mod_inverse(qb % pa, pa);
      u64 kq = pa * mod_inverse(pa % qb, qb);
      a = element_pow(g, x, kp);
      b = element_pow(g, x, kq);
      if (g.mul(a, b) != x) throw Error("sylow split failed: a*b != x");
    }
    s.sub_a = g.cyclic_subgroup(a);
    std::sort(s.sub_a.begin(), s.sub_a.end());
    s.sub_b = g.cyclic_subgroup(b);
    std::sort(s.sub_b.begin(), s.sub_b.end());
  }

  for (u32 i = 0; i < n; ++i) {
    for (u32 j = 0; j < n; ++j) {
      if (i == j) continue;
      const SylowSplit& x1 = split[i];
      const SylowSplit& x2 = split[j];
      bool arrow = false;
      if ((x1.type1_p || x1.type1_q) && (x2.type1_p || x2.type1_q)) {
        arrow = x1.type1_p && x2.type1_q;
      } else if (!(x1.type1_p || x1.type1_q) && !(x2.type1_p || x2.type1_q)) {
        // both inclusions strict: with either one an equality, one element
        // is a power of the other and the pair leaves D(G)
        bool sa = false, sb = false;
        if (sub_leq(x2.sub_a, x2.oa, x1.sub_a, x1.oa, &sa) &&
            sub_leq(x1.sub_b, x1.ob, x2.sub_b, x2.ob, &sb))
          arrow = sa && sb;
      } else if (x1.type1_p) {
        bool sa = false;
        arrow = sub_leq(x2.sub_a, x2.oa, x1.sub_a, x1.oa, &sa) && sa;
      } else if (x2.type1_q) {
        // x1 is type-II, x2 is a q-power: x1 -> x2 iff <b_1> < <b_2>
        bool sb = false;
        arrow = sub_leq(x1.sub_b, x1.ob, x2.sub_b, x2.ob, &sb) && sb;
      }
      if (arrow) ord.arrows.emplace_back(i, j);
    }
  }
  return ord;
}

bool ComparabilityOrder::validate(std::string* why) const {
  const u32 n = static_cast<u32>(vertices.size());
  const u32 W = (n + 63) / 64;
  std::vector<u64> rel(static_cast<std::size_t>(n) * W, 0);
  for (auto& [i, j] : arrows) {
    if (i == j) {
      if (why) *why = "reflexive pair at vertex " + id_str(vertices[i]);
      return false;
    }
    rel[static_cast<std::size_t>(i) * W + j / 64] |= u64(1) << (j % 64);
  }
  auto has = [&](u32 i, u32 j) {
    return (rel[static_cast<std::size_t>(i) * W + j / 64] >> (j % 64)) & 1;
  };
  for (auto& [i, j] : arrows)
    if (has(j, i)) {
      if (why) *why = "antisymmetry violated: " + id_str(vertices[i]) + " <-> " + id_str(vertices[j]);
      return false;
    }
  for (auto& [i, j] : arrows)
    for (u32 w = 0; w < W; ++w) {
      u64 after = rel[static_cast<std::size_t>(j) * W + w] &
                  ~rel[static_cast<std::size_t>(i) * W + w];
      if (w == i / 64) after &= ~(u64(1) << (i % 64));  // i -> j -> i is antisymmetry, not transitivity
      if (after) {
        u32 k = w * 64 + static_cast<u32>(__builtin_ctzll(after));
        if (why)
          *why = "transitivity violated: " + id_str(vertices[i]) + " -> " + id_str(vertices[j]) +
                 " -> " + id_str(vertices[k]);
        return false;
      }
    }
  return true;
}

bool comparability_matches_diff(const Group& g, std::string* detail, const GraphCaps& caps) {
  ComparabilityOrder ord = build_comparability_order(g, caps);
  if (!ord.validate(detail)) return false;
  Graph d = build_diff_graph(g, caps);
  const u32 n = static_cast<u32>(ord.vertices.size());
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (auto& [i, j] : ord.arrows) {
    rel[i][j] = 1;
    rel[j][i] = 1;
  }
  for (u32 i = 0; i < n; ++i)
    for (u32 j = i + 1; j < n; ++j) {
      bool edge = d.adjacent(i, j);
      if (edge != static_cast<bool>(rel[i][j])) {
        if (detail)
          *detail = "mismatch at (" + g.describe(ord.vertices[i]) + ", " +
                    g.describe(ord.vertices[j]) + "): diff=" + (edge ? "1" : "0") +
                    " order=" + (rel[i][j] ? "1" : "0");
        return false;
      }
    }
  return true;
}

}  // namespace dg
