#include "diffgraph/group.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace dg {

struct Group::Impl {
  Backend backend = Backend::Cayley;
  Caps caps;
  std::string spec_str;
  ElementId order = 0;

  // cayley
  struct CayleyData {
    u32 n = 0;
    std::vector<u32> table;
    u32 identity = 0;
    std::vector<u32> inverse;
    std::vector<u32> ord;
    std::vector<std::string> descs;
  } cay;

  // permutation
  struct PermData {
    int degree = 0;
    bool alternating = false;
  } perm;

  // factored-abelian
  struct FactoredData {
    std::vector<u64> moduli;
    std::vector<ElementId> weights;  // first factor most significant
    struct Block {
      u64 p;
      std::vector<std::pair<u32, u64>> comps;  // (modulus index, p^e part)
    };
    std::vector<Block> blocks;
  } fact;
};

namespace {

using Impl = Group::Impl;

u32 cay_mul(const Impl::CayleyData& c, u32 a, u32 b) { return c.table[static_cast<std::size_t>(a) * c.n + b]; }

void finalize_cayley(Impl& im) {
  auto& c = im.cay;
  const u32 n = c.n;
  // identity
  bool found = false;
  for (u32 e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (u32 x = 0; x < n && ok; ++x)
      ok = cay_mul(c, e, x) == x && cay_mul(c, x, e) == x;
    if (ok) {
      c.identity = e;
      found = true;
    }
  }
  if (!found) throw Error("cayley table has no identity element");
  // inverses (Latin rows guarantee a solution in a valid group table)
  c.inverse.assign(n, 0);
  for (u32 a = 0; a < n; ++a) {
    bool got = false;
    for (u32 b = 0; b < n; ++b) {
      if (cay_mul(c, a, b) == c.identity && cay_mul(c, b, a) == c.identity) {
        c.inverse[a] = b;
        got = true;
        break;
      }
    }
    if (!got) throw Error("cayley table: element " + std::to_string(a) + " has no inverse");
  }
  // eager element orders
  c.ord.assign(n, 1);
  for (u32 a = 0; a < n; ++a) {
    u32 k = 1, cur = a;
    while (cur != c.identity) {
      cur = cay_mul(c, cur, a);
      ++k;
      if (k > n) throw Error("cayley table: power walk did not reach identity");
    }
    c.ord[a] = k;
  }
  im.order = n;
}

std::shared_ptr<Impl> make_cayley(u32 n, std::vector<u32> table, std::vector<std::string> descs,
                                  std::string spec_str, const Caps& caps) {
  auto im = std::make_shared<Impl>();
  im->backend = Group::Backend::Cayley;
  im->caps = caps;
  im->spec_str = std::move(spec_str);
  im->cay.n = n;
  im->cay.table = std::move(table);
  im->cay.descs = std::move(descs);
  finalize_cayley(*im);
  return im;
}

std::shared_ptr<Impl> make_perm(int degree, bool alternating, std::string spec_str, const Caps& caps) {
  if (degree > caps.perm_degree_max)
    throw Error("permutation backend capped at degree " + std::to_string(caps.perm_degree_max));
  auto im = std::make_shared<Impl>();
  im->backend = Group::Backend::Permutation;
  im->caps = caps;
  im->spec_str = std::move(spec_str);
  im->perm.degree = degree;
  im->perm.alternating = alternating;
  u64 f = factorial(degree);
  im->order = alternating ? (degree >= 2 ? f / 2 : 1) : f;
  return im;
}

std::shared_ptr<Impl> make_factored(std::vector<u64> moduli, std::string spec_str, const Caps& caps) {
  auto im = std::make_shared<Impl>();
  im->backend = Group::Backend::Factored;
  im->caps = caps;
  im->spec_str = std::move(spec_str);
  auto& f = im->fact;
  f.moduli = std::move(moduli);
  const std::size_t k = f.moduli.size();
  f.weights.assign(k, 1);
  ElementId w = 1;
  for (std::size_t i = k; i-- > 0;) {
    f.weights[i] = w;
    w *= f.moduli[i];
  }
  im->order = w;
  // prime-power component view
  std::map<u64, Impl::FactoredData::Block> blocks;
  for (std::size_t i = 0; i < k; ++i) {
    for (auto& [p, e] : factorize(f.moduli[i])) {
      u64 q = 1;
      for (u32 j = 0; j < e; ++j) q *= p;
      auto& blk = blocks[p];
      blk.p = p;
      blk.comps.emplace_back(static_cast<u32>(i), q);
    }
  }
  for (auto& [p, blk] : blocks) f.blocks.push_back(std::move(blk));
  return im;
}

// ---- dihedral and semidirect tables ----

// D_n ids: rotations r^i -> i, reflections r^i s -> n + i.
std::vector<u32> dihedral_table(u32 n) {
  const u32 N = 2 * n;
  std::vector<u32> t(static_cast<std::size_t>(N) * N);
  auto idx = [&](u32 a, u32 b) { return static_cast<std::size_t>(a) * N + b; };
  for (u32 a = 0; a < N; ++a) {
    for (u32 b = 0; b < N; ++b) {
      u32 r;
      if (a < n && b < n) r = (a + b) % n;
      else if (a < n) r = n + (a + (b - n)) % n;            // r^a * r^j s
      else if (b < n) r = n + ((a - n) + n - b % n) % n;    // r^i s * r^b = r^{i-b} s
      else r = ((a - n) + n - (b - n) % n) % n;             // r^i s * r^j s = r^{i-j}
      t[idx(a, b)] = r;
    }
  }
  return t;
}

std::vector<std::string> dihedral_descs(u32 n) {
  std::vector<std::string> d(2 * n);
  for (u32 i = 0; i < n; ++i) {
    d[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
    d[n + i] = i == 0 ? "s" : (i == 1 ? "r s" : "r^" + std::to_string(i) + " s");
  }
  return d;
}

// Z_n x| Z_m with (x1,y1)(x2,y2) = (x1 + g^{y1} x2, y1 + y2); id = x*m + y.
std::vector<u32> semidirect_table(u32 n, u32 m, u64 g) {
  std::vector<u64> gp(m, 1 % n);
  for (u32 y = 1; y < m; ++y) gp[y] = gp[y - 1] * (g % n) % n;
  const u32 N = n * m;
  std::vector<u32> t(static_cast<std::size_t>(N) * N);
  for (u32 x1 = 0; x1 < n; ++x1)
    for (u32 y1 = 0; y1 < m; ++y1) {
      const std::size_t row = static_cast<std::size_t>(x1 * m + y1) * N;
      for (u32 x2 = 0; x2 < n; ++x2) {
        u32 xr = static_cast<u32>((x1 + gp[y1] * x2) % n);
        for (u32 y2 = 0; y2 < m; ++y2) t[row + x2 * m + y2] = xr * m + (y1 + y2) % m;
      }
    }
  return t;
}

std::vector<std::string> pair_descs(u32 n, u32 m) {
  std::vector<std::string> d(static_cast<std::size_t>(n) * m);
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < m; ++y)
      d[static_cast<std::size_t>(x) * m + y] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  return d;
}

// ---- product-of-components cayley construction ----

struct Component {
  u32 n;
  std::vector<u32> table;
  std::vector<std::string> descs;
};

Component materialize(const Group& g) {
  u64 n64 = g.size();
  Component c;
  c.n = static_cast<u32>(n64);
  c.table.resize(static_cast<std::size_t>(c.n) * c.n);
  for (u32 a = 0; a < c.n; ++a)
    for (u32 b = 0; b < c.n; ++b)
      c.table[static_cast<std::size_t>(a) * c.n + b] = static_cast<u32>(g.mul(a, b));
  c.descs.resize(c.n);
  for (u32 a = 0; a < c.n; ++a) c.descs[a] = g.describe(a);
  return c;
}

std::vector<u32> product_table(const std::vector<u32>& ta, u32 na, const std::vector<u32>& tb, u32 nb) {
  const u32 N = na * nb;
  std::vector<u32> t(static_cast<std::size_t>(N) * N);
  for (u32 xa = 0; xa < na; ++xa)
    for (u32 ya = 0; ya < na; ++ya) {
      const u32 base = ta[static_cast<std::size_t>(xa) * na + ya] * nb;
      for (u32 xb = 0; xb < nb; ++xb) {
        const u32* rowb = tb.data() + static_cast<std::size_t>(xb) * nb;
        u32* out = t.data() + (static_cast<std::size_t>(xa) * nb + xb) * N + static_cast<std::size_t>(ya) * nb;
        for (u32 yb = 0; yb < nb; ++yb) out[yb] = base + rowb[yb];
      }
    }
  return t;
}

void flatten(const GroupSpec& s, std::vector<GroupSpec>& out) {
  if (s.kind == GroupSpec::Kind::Product)
    for (const auto& f : s.factors) flatten(f, out);
  else
    out.push_back(s);
}

}  // namespace

// ---- Group methods ----

Group::Backend Group::backend() const { return impl_->backend; }
const Caps& Group::caps() const { return impl_->caps; }
const std::string& Group::spec_string() const { return impl_->spec_str; }
ElementId Group::order() const { return impl_->order; }

u64 Group::size() const {
  if (impl_->order > static_cast<ElementId>(UINT64_MAX))
    throw Error("group order exceeds 64 bits: " + id_str(impl_->order));
  return static_cast<u64>(impl_->order);
}

bool Group::enumerable() const { return impl_->order <= impl_->caps.enumeration_max; }

ElementId Group::identity() const {
  switch (impl_->backend) {
    case Backend::Cayley: return impl_->cay.identity;
    case Backend::Permutation: return 0;
    case Backend::Factored: return 0;
  }
  return 0;
}

ElementId Group::mul(ElementId a, ElementId b) const {
  const Impl& im = *impl_;
  if (a >= im.order || b >= im.order) throw Error("element id out of range");
  switch (im.backend) {
    case Backend::Cayley:
      return cay_mul(im.cay, static_cast<u32>(a), static_cast<u32>(b));
    case Backend::Permutation: {
      const int d = im.perm.degree;
      if (im.perm.alternating)
        return alt_rank(alt_unrank(d, static_cast<u64>(a)).compose(alt_unrank(d, static_cast<u64>(b))));
      return perm_rank(perm_unrank(d, static_cast<u64>(a)).compose(perm_unrank(d, static_cast<u64>(b))));
    }
    case Backend::Factored: {
      const auto& f = im.fact;
      ElementId out = 0;
      for (std::size_t i = 0; i < f.moduli.size(); ++i) {
        u64 ra = static_cast<u64>((a / f.weights[i]) % f.moduli[i]);
        u64 rb = static_cast<u64>((b / f.weights[i]) % f.moduli[i]);
        out += f.weights[i] * ((ra + rb) % f.moduli[i]);
      }
      return out;
    }
  }
  return 0;
}

ElementId Group::inv(ElementId a) const {
  const Impl& im = *impl_;
  if (a >= im.order) throw Error("element id out of range");
  switch (im.backend) {
    case Backend::Cayley: return im.cay.inverse[static_cast<u32>(a)];
    case Backend::Permutation: {
      const int d = im.perm.degree;
      if (im.perm.alternating) return alt_rank(alt_unrank(d, static_cast<u64>(a)).inverse());
      return perm_rank(perm_unrank(d, static_cast<u64>(a)).inverse());
    }
    case Backend::Factored: {
      const auto& f = im.fact;
      ElementId out = 0;
      for (std::size_t i = 0; i < f.moduli.size(); ++i) {
        u64 r = static_cast<u64>((a / f.weights[i]) % f.moduli[i]);
        out += f.weights[i] * ((f.moduli[i] - r) % f.moduli[i]);
      }
      return out;
    }
  }
  return 0;
}

u64 Group::order_of(ElementId a) const {
  const Impl& im = *impl_;
  if (a >= im.order) throw Error("element id out of range");
  switch (im.backend) {
    case Backend::Cayley: return im.cay.ord[static_cast<u32>(a)];
    case Backend::Permutation: return to_perm(a).order();
    case Backend::Factored: {
      const auto& f = im.fact;
      u64 ord = 1;
      for (std::size_t i = 0; i < f.moduli.size(); ++i) {
        u64 r = static_cast<u64>((a / f.weights[i]) % f.moduli[i]);
        ord = lcm_u64(ord, f.moduli[i] / gcd_u64(f.moduli[i], r));
      }
      return ord;
    }
  }
  return 1;
}

std::vector<ElementId> Group::center() const {
  if (!enumerable()) throw Error("center requires an enumerable group");
  const u64 n = size();
  std::vector<ElementId> out;
  switch (impl_->backend) {
    case Backend::Factored: {
      out.reserve(n);
      for (u64 i = 0; i < n; ++i) out.push_back(i);
      return out;
    }
    case Backend::Permutation: {
      const int d = impl_->perm.degree;
      std::vector<ElementId> gens;
      if (!impl_->perm.alternating) {
        if (d >= 2) gens.push_back(from_perm(Perm::from_cycles(d, {{1, 2}})));
        if (d >= 3) {
          std::vector<int> cyc(d);
          for (int i = 0; i < d; ++i) cyc[i] = i + 1;
          gens.push_back(from_perm(Perm::from_cycles(d, {cyc})));
        }
      } else {
        if (d >= 3) gens.push_back(from_perm(Perm::from_cycles(d, {{1, 2, 3}})));
        if (d >= 4) {
          std::vector<int> cyc;
          if (d % 2 == 1)
            for (int i = 1; i <= d; ++i) cyc.push_back(i);
          else
            for (int i = 2; i <= d; ++i) cyc.push_back(i);
          gens.push_back(from_perm(Perm::from_cycles(d, {cyc})));
        }
      }
      for (u64 z = 0; z < n; ++z) {
        bool central = true;
        for (ElementId g : gens)
          if (mul(z, g) != mul(g, z)) {
            central = false;
            break;
          }
        if (central) out.push_back(z);
      }
      return out;
    }
    case Backend::Cayley: {
      const auto& c = impl_->cay;
      for (u32 z = 0; z < c.n; ++z) {
        bool central = true;
        for (u32 x = 0; x < c.n; ++x)
          if (cay_mul(c, z, x) != cay_mul(c, x, z)) {
            central = false;
            break;
          }
        if (central) out.push_back(z);
      }
      return out;
    }
  }
  return out;
}

std::vector<u64> Group::prime_divisors() const {
  if (impl_->backend == Backend::Factored) {
    std::vector<u64> ps;
    for (const auto& b : impl_->fact.blocks) ps.push_back(b.p);
    std::sort(ps.begin(), ps.end());
    return ps;
  }
  return prime_factors(size());
}

bool Group::is_p_group() const { return prime_divisors().size() <= 1; }

bool Group::is_nilpotent() const {
  if (impl_->backend == Backend::Factored) return true;  // abelian
  if (!enumerable()) throw Error("is_nilpotent requires an enumerable group");
  const u64 n = size();
  std::vector<u64> ords(n);
  for (u64 i = 0; i < n; ++i) ords[i] = order_of(i);
  for (u64 a = 0; a < n; ++a) {
    if (ords[a] == 1) continue;
    for (u64 b = a + 1; b < n; ++b) {
      if (ords[b] == 1) continue;
      if (gcd_u64(ords[a], ords[b]) != 1) continue;
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool Group::is_eppo() const {
  if (impl_->backend == Backend::Factored) {
    // abelian: two coprime element orders would multiply to a mixed order
    return impl_->fact.blocks.size() <= 1;
  }
  if (!enumerable()) throw Error("is_eppo requires an enumerable group");
  const u64 n = size();
  for (u64 i = 0; i < n; ++i) {
    u64 o = order_of(i);
    if (o != 1 && !is_prime_power(o)) return false;
  }
  return true;
}

std::vector<ElementId> Group::cyclic_subgroup(ElementId a) const {
  u64 o = order_of(a);
  if (o > impl_->caps.enumeration_max) throw Error("cyclic subgroup too large to enumerate");
  std::vector<ElementId> out;
  out.reserve(o);
  ElementId e = identity(), cur = e;
  do {
    out.push_back(cur);
    cur = mul(cur, a);
  } while (cur != e);
  return out;
}

std::vector<ElementId> Group::closure(ElementId a, ElementId b) const {
  if (mul(a, b) != mul(b, a)) throw Error("closure: elements do not commute");
  u64 oa = order_of(a), ob = order_of(b);
  if (oa > impl_->caps.enumeration_max / std::max<u64>(ob, 1))
    throw Error("closure too large to enumerate");
  std::vector<ElementId> pa = cyclic_subgroup(a);
  std::vector<ElementId> out;
  out.reserve(oa * ob);
  ElementId e = identity(), bp = e;
  for (u64 j = 0; j < ob; ++j) {
    for (ElementId x : pa) out.push_back(mul(x, bp));
    bp = mul(bp, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > oa * ob) throw Error("closure exceeded o(a)*o(b): internal bug");
  return out;
}

std::string Group::describe(ElementId a) const {
  switch (impl_->backend) {
    case Backend::Cayley: {
      const auto& d = impl_->cay.descs;
      if (!d.empty()) return d[static_cast<u32>(a)];
      return "g" + id_str(a);
    }
    case Backend::Permutation: return to_perm(a).cycle_string();
    case Backend::Factored: {
      auto t = to_tuple(a);
      if (t.size() == 1) return std::to_string(t[0]);
      std::string out = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

int Group::degree() const {
  if (impl_->backend != Backend::Permutation) throw Error("degree: not a permutation group");
  return impl_->perm.degree;
}

bool Group::alternating_only() const {
  if (impl_->backend != Backend::Permutation) throw Error("not a permutation group");
  return impl_->perm.alternating;
}

Perm Group::to_perm(ElementId a) const {
  if (impl_->backend != Backend::Permutation) throw Error("to_perm: not a permutation group");
  const int d = impl_->perm.degree;
  return impl_->perm.alternating ? alt_unrank(d, static_cast<u64>(a)) : perm_unrank(d, static_cast<u64>(a));
}

ElementId Group::from_perm(const Perm& p) const {
  if (impl_->backend != Backend::Permutation) throw Error("from_perm: not a permutation group");
  if (p.degree() != impl_->perm.degree) throw Error("from_perm: wrong degree");
  if (impl_->perm.alternating) {
    if (!p.in_alternating()) throw Error("from_perm: odd permutation in alternating group");
    return alt_rank(p);
  }
  return perm_rank(p);
}

const std::vector<u64>& Group::moduli() const {
  if (impl_->backend != Backend::Factored) throw Error("moduli: not a factored-abelian group");
  return impl_->fact.moduli;
}

std::vector<u64> Group::to_tuple(ElementId a) const {
  if (impl_->backend != Backend::Factored) throw Error("to_tuple: not a factored-abelian group");
  const auto& f = impl_->fact;
  std::vector<u64> out(f.moduli.size());
  for (std::size_t i = 0; i < f.moduli.size(); ++i)
    out[i] = static_cast<u64>((a / f.weights[i]) % f.moduli[i]);
  return out;
}

ElementId Group::from_tuple(const std::vector<u64>& residues) const {
  if (impl_->backend != Backend::Factored) throw Error("from_tuple: not a factored-abelian group");
  const auto& f = impl_->fact;
  if (residues.size() != f.moduli.size()) throw Error("from_tuple: wrong arity");
  ElementId out = 0;
  for (std::size_t i = 0; i < f.moduli.size(); ++i) out += f.weights[i] * (residues[i] % f.moduli[i]);
  return out;
}

std::vector<Group::PrimePart> Group::prime_parts(ElementId a) const {
  if (impl_->backend != Backend::Factored) throw Error("prime_parts: not a factored-abelian group");
  const auto& f = impl_->fact;
  auto tuple = to_tuple(a);
  std::vector<PrimePart> out;
  out.reserve(f.blocks.size());
  for (const auto& blk : f.blocks) {
    PrimePart part;
    part.p = blk.p;
    for (auto& [idx, q] : blk.comps) {
      part.q.push_back(q);
      part.r.push_back(tuple[idx] % q);
    }
    out.push_back(std::move(part));
  }
  return out;
}

const std::vector<u32>& Group::cayley_table() const {
  if (impl_->backend != Backend::Cayley) throw Error("cayley_table: not a cayley-backed group");
  return impl_->cay.table;
}

// ---- construction ----

Group build_group(const GroupSpec& spec, const Caps& caps) {
  using Kind = GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::Cyclic:
      return Group(make_factored({spec.n}, spec.str(), caps));
    case Kind::Symmetric:
      return Group(make_perm(static_cast<int>(spec.n), false, spec.str(), caps));
    case Kind::Alternating:
      return Group(make_perm(static_cast<int>(spec.n), true, spec.str(), caps));
    case Kind::Dihedral: {
      if (2 * spec.n > caps.cayley_max) throw Error("D" + std::to_string(spec.n) + " exceeds cayley cap");
      u32 n = static_cast<u32>(spec.n);
      return Group(make_cayley(2 * n, dihedral_table(n), dihedral_descs(n), spec.str(), caps));
    }
    case Kind::Semidirect: {
      if (spec.n * spec.m > caps.cayley_max) throw Error(spec.str() + " exceeds cayley cap");
      u32 n = static_cast<u32>(spec.n), m = static_cast<u32>(spec.m);
      return Group(make_cayley(n * m, semidirect_table(n, m, spec.g), pair_descs(n, m), spec.str(), caps));
    }
    case Kind::CayleyFile:
      return import_cayley(spec.path, caps);
    case Kind::Product: {
      std::vector<GroupSpec> leaves;
      flatten(spec, leaves);
      if (leaves.empty()) throw Error("empty product");
      bool all_cyclic = std::all_of(leaves.begin(), leaves.end(),
                                    [](const GroupSpec& s) { return s.kind == Kind::Cyclic; });
      if (all_cyclic) {
        std::vector<u64> moduli;
        for (const auto& l : leaves) moduli.push_back(l.n);
        return Group(make_factored(std::move(moduli), spec.str(), caps));
      }
      // general product: materialize components and fold cayley tables
      std::vector<Component> comps;
      ElementId total = 1;
      for (const auto& l : leaves) {
        Group g = build_group(l, caps);
        total *= g.order();
        if (total > caps.cayley_max) throw Error(spec.str() + " exceeds cayley cap");
        comps.push_back(materialize(g));
      }
      std::vector<u32> table = comps[0].table;
      u32 n = comps[0].n;
      for (std::size_t i = 1; i < comps.size(); ++i) {
        table = product_table(table, n, comps[i].table, comps[i].n);
        n *= comps[i].n;
      }
      // component-wise descriptions
      std::vector<std::string> descs(n);
      for (u32 x = 0; x < n; ++x) {
        u32 rem = x;
        std::vector<u32> part(comps.size());
        for (std::size_t i = comps.size(); i-- > 0;) {
          part[i] = rem % comps[i].n;
          rem /= comps[i].n;
        }
        std::string d = "(";
        for (std::size_t i = 0; i < comps.size(); ++i) {
          if (i) d += ",";
          d += comps[i].descs[part[i]];
        }
        descs[x] = d + ")";
      }
      return Group(make_cayley(n, std::move(table), std::move(descs), spec.str(), caps));
    }
  }
  throw Error("unknown group spec");
}

Group build_group(std::string_view spec_text, const Caps& caps) {
  return build_group(parse_spec(spec_text), caps);
}

ElementId element_pow(const Group& g, ElementId a, u64 k) {
  ElementId r = g.identity(), b = a;
  while (k) {
    if (k & 1) r = g.mul(r, b);
    b = g.mul(b, b);
    k >>= 1;
  }
  return r;
}

// ---- cayley file io ----

Group import_cayley(const std::filesystem::path& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cayley file: " + path.string());
  std::vector<u64> values;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    u64 v;
    while (ls >> v) values.push_back(v);
  }
  if (values.empty()) throw Error("cayley file is empty: " + path.string());
  u64 n64 = values[0];
  if (n64 < 1) throw Error("cayley file: n must be >= 1");
  if (n64 > caps.cayley_max) throw Error("cayley file: n exceeds cap");
  u32 n = static_cast<u32>(n64);
  if (values.size() != 1 + static_cast<std::size_t>(n) * n)
    throw Error("cayley file: expected " + std::to_string(static_cast<u64>(n) * n) +
                " entries, got " + std::to_string(values.size() - 1));
  std::vector<u32> t(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (values[i + 1] >= n)
      throw Error("cayley file: entry out of range at cell " + std::to_string(i));
    t[i] = static_cast<u32>(values[i + 1]);
  }
  // latin square rows and columns
  for (u32 r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    for (u32 c = 0; c < n; ++c) {
      u32 v = t[static_cast<std::size_t>(r) * n + c];
      if (seen[v])
        throw Error("cayley file: row " + std::to_string(r) + " repeats entry " + std::to_string(v));
      seen[v] = true;
    }
  }
  for (u32 c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (u32 r = 0; r < n; ++r) {
      u32 v = t[static_cast<std::size_t>(r) * n + c];
      if (seen[v])
        throw Error("cayley file: column " + std::to_string(c) + " repeats entry " + std::to_string(v));
      seen[v] = true;
    }
  }
  // identity before associativity: a latin square without one is not worth
  // the O(n^3) pass
  auto at = [&](u32 a, u32 b) { return t[static_cast<std::size_t>(a) * n + b]; };
  {
    bool found = false;
    for (u32 e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (u32 x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
      found = ok;
    }
    if (!found) throw Error("cayley file: no identity element");
  }
  // associativity: full check up to 512, then a seeded 10*n^2 triple sample
  auto check_triple = [&](u32 a, u32 b, u32 c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw Error("cayley file: associativity fails at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + "): (ab)c=" +
                  std::to_string(at(at(a, b), c)) + ", a(bc)=" + std::to_string(at(a, at(b, c))));
  };
  if (n <= 512) {
    for (u32 a = 0; a < n; ++a)
      for (u32 b = 0; b < n; ++b)
        for (u32 c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    Rng rng(0xCA71E7ULL ^ n);
    u64 samples = 10ULL * n * n;
    for (u64 i = 0; i < samples; ++i) {
      u32 a = static_cast<u32>(rng.below(n));
      u32 b = static_cast<u32>(rng.below(n));
      u32 c = static_cast<u32>(rng.below(n));
      check_triple(a, b, c);
    }
  }
  return Group(make_cayley(n, std::move(t), {}, "cayley(" + path.string() + ")", caps));
}

void export_cayley(const Group& g, const std::filesystem::path& path) {
  u64 n = g.size();
  if (n > g.caps().cayley_max) throw Error("export_cayley: group exceeds cayley cap");
  std::ofstream out(path);
  if (!out) throw Error("cannot write cayley file: " + path.string());
  out << "# cayley table of " << g.spec_string() << "\n" << n << "\n";
  for (u64 a = 0; a < n; ++a) {
    for (u64 b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << id_str(g.mul(a, b));
    }
    out << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace dg
