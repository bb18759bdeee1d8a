#include "diffgraph/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace dg {

Perm Perm::identity(int n) {
  std::vector<u8> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw Error("cycle point out of range");
      p.img[from] = static_cast<u8>(to);
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& rhs) const {
  const int n = degree();
  std::vector<u8> out(n);
  for (int i = 0; i < n; ++i) out[i] = img[rhs.img[i]];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  const int n = degree();
  std::vector<u8> out(n);
  for (int i = 0; i < n; ++i) out[img[i]] = static_cast<u8>(i);
  return Perm(std::move(out));
}

std::vector<std::vector<u8>> Perm::cycles() const {
  const int n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<u8>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || img[i] == i) continue;
    std::vector<u8> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<u8>(j));
      j = img[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Perm::support() const {
  int s = 0;
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) ++s;
  return s;
}

std::vector<u8> Perm::moved_points() const {
  std::vector<u8> out;
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) out.push_back(static_cast<u8>(i));
  return out;
}

int Perm::sign() const {
  int moved = 0, ncyc = 0;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img[i] == i) continue;
    ++ncyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++moved;
      j = img[j];
    }
  }
  return ((moved - ncyc) % 2 == 0) ? 1 : -1;
}

u64 Perm::order() const {
  u64 ord = 1;
  for (const auto& cyc : cycles()) ord = lcm_u64(ord, cyc.size());
  return ord;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cyc : cs) {
    out.push_back('(');
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(cyc[i] + 1);
    }
    out.push_back(')');
  }
  return out;
}

u64 factorial(int n) {
  u64 f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<u64>(i);
  return f;
}

namespace {

// Lehmer digits: code[i] = #{j > i : p[j] < p[i]}, so code[i] <= n-1-i.
std::vector<int> lehmer_code(const Perm& p) {
  const int n = p.degree();
  std::vector<int> code(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.img[j] < p.img[i]) ++code[i];
  return code;
}

Perm lehmer_decode(int n, const std::vector<int>& code) {
  std::vector<u8> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<u8> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = avail[code[i]];
    avail.erase(avail.begin() + code[i]);
  }
  return Perm(std::move(img));
}

}  // namespace

u64 perm_rank(const Perm& p) {
  const int n = p.degree();
  auto code = lehmer_code(p);
  u64 r = 0;
  for (int i = 0; i < n; ++i) r += static_cast<u64>(code[i]) * factorial(n - 1 - i);
  return r;
}

Perm perm_unrank(int n, u64 r) {
  std::vector<int> code(n, 0);
  for (int i = 0; i < n; ++i) {
    u64 f = factorial(n - 1 - i);
    code[i] = static_cast<int>(r / f);
    r %= f;
  }
  return lehmer_decode(n, code);
}

u64 alt_rank(const Perm& p) {
  const int n = p.degree();
  if (n <= 2) return 0;
  auto code = lehmer_code(p);
  u64 r = 0;
  for (int i = 0; i <= n - 3; ++i)
    r += static_cast<u64>(code[i]) * (factorial(n - 1 - i) / 2);
  return r;
}

Perm alt_unrank(int n, u64 r) {
  if (n <= 2) return Perm::identity(n);
  std::vector<int> code(n, 0);
  int parity = 0;
  for (int i = 0; i <= n - 3; ++i) {
    u64 w = factorial(n - 1 - i) / 2;
    code[i] = static_cast<int>(r / w);
    r %= w;
    parity ^= code[i] & 1;
  }
  code[n - 2] = parity;  // forces an even permutation
  code[n - 1] = 0;
  return lehmer_decode(n, code);
}

}  // namespace dg
