#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dg {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Dense element identifier, 0..|G|-1 in every backend. 128 bits because
// factored-abelian groups built by the embedder exceed 2^64 elements.
using ElementId = unsigned __int128;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

std::string id_str(ElementId v);
ElementId id_parse(std::string_view s);

struct IdHash {
  std::size_t operator()(ElementId v) const noexcept {
    u64 lo = static_cast<u64>(v);
    u64 hi = static_cast<u64>(v >> 64);
    u64 x = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);  // throws on overflow
u64 mod_pow(u64 base, u64 exp, u64 mod);
u64 mod_inverse(u64 a, u64 m);  // gcd(a,m) = 1 required

bool is_prime(u64 n);
// True iff n = p^k with k >= 1; sets *p when given. 1 is not a prime power.
bool is_prime_power(u64 n, u64* p = nullptr);
std::vector<u64> prime_factors(u64 n);               // distinct, ascending
std::vector<std::pair<u64, u32>> factorize(u64 n);   // (p, exponent), ascending
u64 nth_prime(u32 i);                                // 1-based: nth_prime(1) = 2

// Deterministic PRNG helpers. Raw engine output only: the distribution
// classes differ between standard libraries and would break byte-stable
// reports.
class Rng {
 public:
  explicit Rng(u64 seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}
  u64 next() {
    // splitmix64
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u64 below(u64 n) { return n ? next() % n : 0; }

 private:
  u64 state_;
};

}  // namespace dg
