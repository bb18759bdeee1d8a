#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "diffgraph/group.hpp"
#include "oracles.hpp"

using namespace dg;

namespace {

std::map<u64, u64> order_histogram(const Group& g) {
  std::map<u64, u64> hist;
  for (u64 i = 0; i < g.size(); ++i) ++hist[g.order_of(i)];
  return hist;
}

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("spec parser: grammar and errors") {
  CHECK(parse_spec("Z6").str() == "Z6");
  CHECK(parse_spec(" Z7 x Z12 ").str() == "Z7 x Z12");
  CHECK(parse_spec("sd(Z7,Z12,3)").str() == "sd(Z7,Z12,3)");
  CHECK(parse_spec("Z2 x Z3 x Z4").factors.size() == 3);
  CHECK(parse_spec("cayley(/tmp/t.cayley)").path == "/tmp/t.cayley");
  CHECK(parse_spec("D9").kind == GroupSpec::Kind::Dihedral);
  CHECK(parse_spec("A5").kind == GroupSpec::Kind::Alternating);

  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("Q8"), ParseError);
  CHECK_THROWS_AS(parse_spec("Z"), ParseError);
  CHECK_THROWS_AS(parse_spec("Z6 x"), ParseError);
  CHECK_THROWS_AS(parse_spec("Z6 )"), ParseError);
  // parse errors carry a position
  try {
    parse_spec("Z6 x Q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 5);
  }
}

TEST_CASE("sd validity: gcd and order-of-action conditions") {
  // 2^12 = 4096 = 1 mod 7, accepted
  CHECK_NOTHROW(parse_spec("sd(Z7,Z12,2)"));
  // 3^12 = (3^6)^2 = 1 mod 7, nontrivial since 3 != 1
  CHECK_NOTHROW(parse_spec("sd(Z7,Z12,3)"));
  // gcd(7,7) != 1
  CHECK_THROWS_AS(parse_spec("sd(Z7,Z12,7)"), ParseError);
  // 3^2 = 2 mod 7, not an action of Z_2
  CHECK_THROWS_AS(parse_spec("sd(Z7,Z2,3)"), ParseError);
}

TEST_CASE("build_group: backend selection and orders") {
  Group z6 = build_group("Z6");
  CHECK(z6.backend() == Group::Backend::Factored);
  CHECK(z6.size() == 6);
  CHECK(order_histogram(z6) == std::map<u64, u64>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});

  Group s5 = build_group("S5");
  CHECK(s5.backend() == Group::Backend::Permutation);
  CHECK(s5.size() == 120);

  Group d9 = build_group("D9");
  CHECK(d9.backend() == Group::Backend::Cayley);
  CHECK(d9.size() == 18);

  Group g84 = build_group("sd(Z7,Z12,3)");
  CHECK(g84.backend() == Group::Backend::Cayley);
  CHECK(g84.size() == 84);

  Group zz = build_group("Z4 x Z4 x Z6");
  CHECK(zz.backend() == Group::Backend::Factored);
  CHECK(zz.size() == 96);

  Group mixed = build_group("S3 x S3");
  CHECK(mixed.backend() == Group::Backend::Cayley);
  CHECK(mixed.size() == 36);

  CHECK_THROWS_AS(build_group("S11"), Error);       // permutation degree cap
  CHECK_THROWS_AS(build_group("D5000"), Error);     // cayley cap
  CHECK_THROWS_AS(build_group("S5 x S5"), Error);   // product cayley cap (14400)
}

TEST_CASE("S5 element order multiset matches the enumeration oracle") {
  auto expect = oracle::sym_order_histogram(5);
  CHECK(expect == std::map<u64, u64>{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}});
  CHECK(order_histogram(build_group("S5")) == expect);
}

TEST_CASE("multiply / inverse / order_of basics") {
  Group z6 = build_group("Z6");
  CHECK(z6.mul(2, 3) == 5);
  CHECK(z6.inv(2) == 4);
  CHECK(z6.order_of(3) == 2);
  CHECK_THROWS_AS(z6.mul(2, 9), Error);  // foreign id

  // (1 2) * (1 3) = (1 3 2) under (a*b)(i) = a(b(i))
  Group s4 = build_group("S4");
  ElementId t12 = s4.from_perm(Perm::from_cycles(4, {{1, 2}}));
  ElementId t13 = s4.from_perm(Perm::from_cycles(4, {{1, 3}}));
  CHECK(s4.to_perm(s4.mul(t12, t13)).cycle_string() == "(1 3 2)");

  // noncommutative witness in sd(Z3,Z4,2): phi(1)(1) = 2
  Group sd34 = build_group("sd(Z3,Z4,2)");
  ElementId a = 1 * 4 + 0;  // (1,0)
  ElementId b = 0 * 4 + 1;  // (0,1)
  CHECK(sd34.mul(a, b) != sd34.mul(b, a));
  CHECK(sd34.describe(sd34.mul(a, b)) == "(1,1)");
  CHECK(sd34.describe(sd34.mul(b, a)) == "(2,1)");
}

TEST_CASE("group axioms hold on samples across backends") {
  for (const char* spec : {"Z12", "D7", "S4", "A5", "sd(Z5,Z4,2)", "Z3 x Z9"}) {
    Group g = build_group(spec);
    const u64 n = g.size();
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      ElementId a = rng.below(n), b = rng.below(n), c = rng.below(n);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.mul(a, g.identity()) == a);
      CHECK(g.mul(g.identity(), a) == a);
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      // conjugation preserves order
      ElementId conj = g.mul(g.mul(b, a), g.inv(b));
      CHECK(g.order_of(conj) == g.order_of(a));
      // o(a) divides |G|
      CHECK(n % g.order_of(a) == 0);
    }
  }
}

TEST_CASE("center: abelian, symmetric, and the order-84 witness") {
  CHECK(build_group("Z6").center().size() == 6);
  CHECK(build_group("S5").center().size() == 1);
  CHECK(build_group("S4").center().size() == 1);
  CHECK(build_group("A5").center().size() == 1);
  CHECK(build_group("A4").center().size() == 1);
  CHECK(build_group("sd(Z7,Z12,3)").center().size() == 2);
  CHECK(build_group("D6").center().size() == 2);   // n even: {e, r^{n/2}}
  CHECK(build_group("D7").center().size() == 1);   // n odd
  // cross-check the generator-based permutation route against a full scan
  Group s4 = build_group("S4");
  std::set<ElementId> brute;
  for (u64 z = 0; z < s4.size(); ++z) {
    bool central = true;
    for (u64 x = 0; x < s4.size() && central; ++x) central = s4.mul(z, x) == s4.mul(x, z);
    if (central) brute.insert(z);
  }
  auto api = s4.center();
  CHECK(brute == std::set<ElementId>(api.begin(), api.end()));
}

TEST_CASE("prime_divisors and is_p_group") {
  CHECK(build_group("sd(Z7,Z12,3)").prime_divisors() == std::vector<u64>{2, 3, 7});
  Group d8 = build_group("D8");
  CHECK(d8.size() == 16);
  CHECK(d8.prime_divisors() == std::vector<u64>{2});
  CHECK(d8.is_p_group());
  CHECK(build_group("S5").prime_divisors() == std::vector<u64>{2, 3, 5});
  CHECK_FALSE(build_group("S5").is_p_group());
  Group z1 = build_group("Z1");
  CHECK(z1.is_trivial());
  CHECK(z1.is_p_group());  // vacuous; flagged separately by is_trivial
}

TEST_CASE("is_nilpotent: abelian, S3, and the order-84 witness") {
  CHECK(build_group("Z4 x Z4 x Z6").is_nilpotent());
  CHECK_FALSE(build_group("S3").is_nilpotent());
  CHECK_FALSE(build_group("sd(Z7,Z12,3)").is_nilpotent());
  CHECK(build_group("D4").is_nilpotent());         // 2-group
  CHECK_FALSE(build_group("D6").is_nilpotent());   // coprime non-commuting pair exists
}

TEST_CASE("is_eppo examples") {
  CHECK(build_group("S3").is_eppo());
  CHECK_FALSE(build_group("Z6").is_eppo());
  CHECK_FALSE(build_group("S5").is_eppo());
  CHECK(build_group("S4").is_eppo());
  CHECK(build_group("D9").is_eppo());  // orders 1, 2, 3, 9
  CHECK(order_histogram(build_group("D9")) ==
        std::map<u64, u64>{{1, 1}, {2, 9}, {3, 2}, {9, 6}});
}

TEST_CASE("cyclic_subgroup and closure") {
  Group z6 = build_group("Z6");
  CHECK(z6.cyclic_subgroup(2) == std::vector<ElementId>{0, 2, 4});
  auto cl = z6.closure(2, 3);
  CHECK(cl == std::vector<ElementId>{0, 1, 2, 3, 4, 5});

  Group s4 = build_group("S4");
  ElementId t12 = s4.from_perm(Perm::from_cycles(4, {{1, 2}}));
  ElementId t34 = s4.from_perm(Perm::from_cycles(4, {{3, 4}}));
  CHECK(s4.closure(t12, t34).size() == 4);  // Klein four
  ElementId t13 = s4.from_perm(Perm::from_cycles(4, {{1, 3}}));
  CHECK_THROWS_AS(s4.closure(t12, t13), Error);  // non-commuting

  // order_of(a) = |<a>| and a^{o(a)} = e, across backends
  for (const char* spec : {"Z12", "D5", "S4", "A4", "sd(Z3,Z4,2)"}) {
    Group g = build_group(spec);
    for (u64 a = 0; a < g.size(); ++a) {
      CHECK(g.cyclic_subgroup(a).size() == g.order_of(a));
      CHECK(element_pow(g, a, g.order_of(a)) == g.identity());
    }
  }
}

TEST_CASE("permutation support, sign, alternating membership") {
  Perm id = Perm::identity(5);
  CHECK(id.support() == 0);
  CHECK(id.sign() == 1);
  CHECK(id.cycle_string() == "e");

  Perm p = Perm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(p.support() == 5);
  CHECK(p.cycles().size() == 2);
  CHECK(p.sign() == -1);  // [5] - 2 cycles = 3, odd
  CHECK_FALSE(p.in_alternating());

  Perm q = Perm::from_cycles(5, {{1, 2}, {3, 4}});
  CHECK(q.support() == 4);
  CHECK(q.sign() == 1);
  CHECK(q.in_alternating());

  // sign formula agrees with inversion-count parity on all of S_5
  oracle::PermVec v(5);
  std::iota(v.begin(), v.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (v[i] > v[j]) ++inv;
    Perm w(std::vector<u8>(v.begin(), v.end()));
    CHECK(w.sign() == (inv % 2 ? -1 : 1));
    CHECK(w.in_alternating() == (inv % 2 == 0));
  } while (std::next_permutation(v.begin(), v.end()));

  // sign is multiplicative on sampled pairs
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Perm a = perm_unrank(6, rng.below(factorial(6)));
    Perm b = perm_unrank(6, rng.below(factorial(6)));
    CHECK(a.compose(b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("perm and alternating ranking are bijective") {
  for (int n : {1, 2, 3, 4, 5}) {
    std::set<std::vector<u8>> seen;
    for (u64 r = 0; r < factorial(n); ++r) {
      Perm p = perm_unrank(n, r);
      CHECK(perm_rank(p) == r);
      seen.insert(p.img);
    }
    CHECK(seen.size() == factorial(n));
  }
  for (int n : {3, 4, 5, 6}) {
    u64 half = factorial(n) / 2;
    std::set<std::vector<u8>> seen;
    for (u64 r = 0; r < half; ++r) {
      Perm p = alt_unrank(n, r);
      CHECK(p.in_alternating());
      CHECK(alt_rank(p) == r);
      seen.insert(p.img);
    }
    CHECK(seen.size() == half);
  }
}

TEST_CASE("direct product orders are lcms of component orders") {
  Group g = build_group("Z4 x Z6");
  for (u64 a = 0; a < 4; ++a)
    for (u64 b = 0; b < 6; ++b) {
      ElementId id = g.from_tuple({a, b});
      u64 oa = a ? 4 / gcd_u64(4, a) : 1;
      u64 ob = b ? 6 / gcd_u64(6, b) : 1;
      CHECK(g.order_of(id) == lcm_u64(oa, ob));
    }
  // same law on a cayley-backed product, sampled
  Group h = build_group("S3 x Z4");
  Group s3 = build_group("S3");
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    u64 i = rng.below(6), j = rng.below(4);
    ElementId id = i * 4 + j;
    CHECK(h.order_of(id) == lcm_u64(s3.order_of(i), j ? 4 / gcd_u64(4, j) : 1));
  }
}

TEST_CASE("sd with trivial action is the direct product (order multisets)") {
  CHECK(order_histogram(build_group("sd(Z5,Z4,1)")) == order_histogram(build_group("Z5 x Z4")));
  CHECK(order_histogram(build_group("sd(Z9,Z6,1)")) == order_histogram(build_group("Z9 x Z6")));
  // and a nontrivial action differs
  CHECK(order_histogram(build_group("sd(Z7,Z12,3)")) != order_histogram(build_group("Z7 x Z12")));
}

TEST_CASE("cayley import/export: round trip and validation errors") {
  auto path = tmp_file("dg_z6.cayley");
  export_cayley(build_group("Z6"), path);
  Group z6 = import_cayley(path);
  CHECK(z6.size() == 6);
  CHECK(order_histogram(z6) == order_histogram(build_group("Z6")));

  // table of Z2
  auto z2p = tmp_file("dg_z2.cayley");
  {
    std::ofstream f(z2p);
    f << "# comment line\n2\n0 1\n1 0\n";
  }
  Group z2 = import_cayley(z2p);
  CHECK(z2.size() == 2);
  CHECK(z2.identity() == 0);

  // repeated entry in a row: latin violation
  auto bad1 = tmp_file("dg_bad1.cayley");
  {
    std::ofstream f(bad1);
    f << "3\n0 0 1\n1 2 0\n2 1 0\n";
  }
  CHECK_THROWS_WITH_AS(import_cayley(bad1), doctest::Contains("repeats"), Error);

  // latin square without identity
  auto bad2 = tmp_file("dg_bad2.cayley");
  {
    std::ofstream f(bad2);
    f << "3\n1 0 2\n0 2 1\n2 1 0\n";
  }
  CHECK_THROWS_WITH_AS(import_cayley(bad2), doctest::Contains("identity"), Error);

  // latin square with identity but broken associativity
  auto bad3 = tmp_file("dg_bad3.cayley");
  {
    std::ofstream f(bad3);
    f << "5\n";
    f << "0 1 2 3 4\n";
    f << "1 0 3 4 2\n";
    f << "2 4 0 1 3\n";
    f << "3 2 4 0 1\n";
    f << "4 3 1 2 0\n";
  }
  CHECK_THROWS_WITH_AS(import_cayley(bad3), doctest::Contains("associativity"), Error);

  // exporting a permutation group round-trips element orders
  auto s4p = tmp_file("dg_s4.cayley");
  export_cayley(build_group("S4"), s4p);
  CHECK(order_histogram(import_cayley(s4p)) == order_histogram(build_group("S4")));
}

TEST_CASE("factored backend handles very large groups pairwise") {
  // product of the squares of the first 12 primes: |G| ~ 5.5e25
  std::vector<GroupSpec> fs;
  for (u32 i = 1; i <= 12; ++i) {
    u64 p = nth_prime(i);
    fs.push_back(GroupSpec::cyclic(p));
    fs.push_back(GroupSpec::cyclic(p));
  }
  Group g = build_group(GroupSpec::product(fs));
  CHECK_FALSE(g.enumerable());
  std::vector<u64> t1(24, 0), t2(24, 0);
  t1[0] = 1;
  t1[23] = 36;
  t2[23] = 1;
  ElementId a = g.from_tuple(t1), b = g.from_tuple(t2);
  CHECK(g.order_of(a) == 74);  // 2 * 37
  CHECK(g.order_of(b) == 37);
  CHECK(g.mul(a, g.inv(a)) == g.identity());
  ElementId ab = g.mul(a, b);
  auto t = g.to_tuple(ab);
  CHECK(t[0] == 1);
  CHECK(t[23] == 0);  // 36 + 1 = 0 mod 37
  CHECK_THROWS_AS(g.center(), Error);  // not enumerable
}
