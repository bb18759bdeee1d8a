#include "diffgraph/ids.hpp"

#include <algorithm>
#include <numeric>

namespace dg {

std::string id_str(ElementId v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ElementId id_parse(std::string_view s) {
  if (s.empty()) throw Error("empty element id");
  ElementId v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error("bad element id: " + std::string(s));
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  u64 g = std::gcd(a, b);
  u64 q = a / g;
  if (q > UINT64_MAX / b) throw Error("lcm overflow");
  return q * b;
}

u64 mod_pow(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<u64>(r);
}

u64 mod_inverse(u64 a, u64 m) {
  // extended euclid
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t, nt);
    nt -= q * t;
    std::swap(r, nr);
    nr -= q * r;
  }
  if (r != 1) throw Error("mod_inverse: not coprime");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(u64 n, u64* p) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (p) *p = f[0].first;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::pair<u64, u32>> factorize(u64 n) {
  std::vector<std::pair<u64, u32>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      u32 e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 nth_prime(u32 i) {
  u64 count = 0, n = 1;
  while (count < i) {
    ++n;
    if (is_prime(n)) ++count;
  }
  return n;
}

}  // namespace dg
