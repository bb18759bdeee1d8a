#pragma once

#include <string>
#include <vector>

#include "diffgraph/ids.hpp"

namespace dg {

// Permutation of {0..n-1} stored as an image array. Composition applies the
// right factor first: (a*b)(i) = a(b(i)).
struct Perm {
  std::vector<u8> img;

  Perm() = default;
  explicit Perm(std::vector<u8> images) : img(std::move(images)) {}

  static Perm identity(int n);
  // Points are 1-based in cycle input, matching the printed form.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  Perm compose(const Perm& rhs) const;  // this * rhs
  Perm inverse() const;

  // Nontrivial cycles, each starting at its minimum point, sorted by that
  // minimum. Points are 0-based here.
  std::vector<std::vector<u8>> cycles() const;
  int support() const;                // number of moved points
  std::vector<u8> moved_points() const;
  int sign() const;                   // (-1)^{support - #nontrivial cycles}
  bool in_alternating() const { return sign() == 1; }
  u64 order() const;                  // lcm of cycle lengths

  std::string cycle_string() const;   // 1-based, "e" for the identity

  bool operator==(const Perm& o) const { return img == o.img; }
};

u64 factorial(int n);

// Lehmer-code ranking of S_n: a bijection S_n <-> [0, n!).
u64 perm_rank(const Perm& p);
Perm perm_unrank(int n, u64 r);

// Ranking of A_n <-> [0, n!/2): the last free Lehmer digit is determined by
// the parity of the others, so it is dropped from the code.
u64 alt_rank(const Perm& p);
Perm alt_unrank(int n, u64 r);

}  // namespace dg
