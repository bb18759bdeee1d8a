#include "diffgraph/adjacency.hpp"

#include <algorithm>

namespace dg {

namespace {

// ---- factored-abelian blockwise kernel ----
// Distinct primes make the CRT exponent always solvable, so x in <y> iff
// the p-part of x lies in the p-part of <y> for every prime p.

u64 part_order(const Group::PrimePart& part) {
  u64 o = 1;
  for (std::size_t j = 0; j < part.q.size(); ++j)
    o = std::max(o, part.q[j] / gcd_u64(part.q[j], part.r[j]));
  return o;  // all component orders are powers of the same p
}

bool part_member(const Group::PrimePart& x, const Group::PrimePart& y) {
  u64 oy = part_order(y);
  std::vector<u64> cur(y.r.size(), 0);
  for (u64 k = 0; k < oy; ++k) {
    if (cur == x.r) return true;
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = (cur[j] + y.r[j]) % y.q[j];
  }
  return false;
}

bool factored_pow_member(const Group& g, ElementId a, ElementId b) {
  // a in <b>
  auto pa = g.prime_parts(a), pb = g.prime_parts(b);
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (!part_member(pa[i], pb[i])) return false;
  return true;
}

bool factored_cyclic_pair(const Group& g, ElementId a, ElementId b) {
  auto pa = g.prime_parts(a), pb = g.prime_parts(b);
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (!part_member(pa[i], pb[i]) && !part_member(pb[i], pa[i])) return false;
  return true;
}

// ---- generic (cayley / permutation) kernel ----

bool generic_member(const Group& g, ElementId a, ElementId b, u64 oa, u64 ob) {
  // a in <b>; <b> cyclic has a unique subgroup of order oa
  if (ob % oa != 0) return false;
  ElementId c = element_pow(g, b, ob / oa);
  ElementId e = g.identity(), cur = e;
  for (u64 k = 0; k < oa; ++k) {
    if (cur == a) return true;
    cur = g.mul(cur, c);
  }
  return false;
}

bool closure_is_cyclic(const Group& g, ElementId a, ElementId b) {
  auto h = g.closure(a, b);
  u64 max_ord = 0;
  for (ElementId x : h) max_ord = std::max(max_ord, g.order_of(x));
  return max_ord == h.size();
}

}  // namespace

bool pow_adjacent(const Group& g, ElementId a, ElementId b) {
  if (a == b) return true;
  ElementId e = g.identity();
  if (a == e || b == e) return true;
  if (g.backend() == Group::Backend::Factored)
    return factored_pow_member(g, a, b) || factored_pow_member(g, b, a);
  u64 oa = g.order_of(a), ob = g.order_of(b);
  if (oa <= ob && generic_member(g, a, b, oa, ob)) return true;
  if (ob <= oa && generic_member(g, b, a, ob, oa)) return true;
  return false;
}

bool is_cyclic_pair(const Group& g, ElementId a, ElementId b) {
  if (a == b) return true;
  ElementId e = g.identity();
  if (a == e || b == e) return true;
  if (g.mul(a, b) != g.mul(b, a)) return false;
  if (g.backend() == Group::Backend::Factored) return factored_cyclic_pair(g, a, b);
  return closure_is_cyclic(g, a, b);
}

bool diff_adjacent(const Group& g, ElementId a, ElementId b) {
  if (a == b) return false;
  ElementId e = g.identity();
  if (a == e || b == e) return false;
  if (g.mul(a, b) != g.mul(b, a)) return false;
  u64 oa = g.order_of(a), ob = g.order_of(b);
  u64 p1 = 0, p2 = 0;
  if (is_prime_power(oa, &p1) && is_prime_power(ob, &p2) && p1 == p2)
    return false;  // cyclic closure would be a cyclic p-group, forcing a power relation
  if (gcd_u64(oa, ob) == 1) return true;  // commuting, coprime, non-identity
  if (pow_adjacent(g, a, b)) return false;
  return is_cyclic_pair(g, a, b);
}

AdjacencyVerdict classify_pair(const Group& g, ElementId a, ElementId b) {
  AdjacencyVerdict v;
  v.pow = pow_adjacent(g, a, b);
  v.epow = v.pow || is_cyclic_pair(g, a, b);
  v.diff = v.epow && !v.pow && a != b;
  return v;
}

bool diff_adjacent_reference(const Group& g, ElementId a, ElementId b) {
  if (a == b) return false;
  // pow by full power walks
  bool pow = false;
  {
    auto pb = g.cyclic_subgroup(b);
    pow = std::find(pb.begin(), pb.end(), a) != pb.end();
    if (!pow) {
      auto pa = g.cyclic_subgroup(a);
      pow = std::find(pa.begin(), pa.end(), b) != pa.end();
    }
  }
  if (pow) return false;
  if (g.mul(a, b) != g.mul(b, a)) return false;
  return closure_is_cyclic(g, a, b);
}

}  // namespace dg
