#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diffgraph/group_spec.hpp"
#include "diffgraph/ids.hpp"
#include "diffgraph/permutation.hpp"

namespace dg {

// Size limits for the three backends. The cayley cap keeps dense tables
// below 256 MB of 32-bit entries; enumeration_max bounds any operation that
// must visit every element (factored-abelian groups past it still support
// pairwise operations).
struct Caps {
  u32 cayley_max = 8192;
  int perm_degree_max = 10;
  u64 enumeration_max = 10'000'000;
};

// A finite group under one of three computational backends. Immutable after
// construction; all operations are const and safe to call concurrently.
class Group {
 public:
  enum class Backend { Cayley, Permutation, Factored };

  Backend backend() const;
  const Caps& caps() const;
  const std::string& spec_string() const;

  ElementId order() const;
  u64 size() const;          // order as u64; throws if it does not fit
  bool enumerable() const;   // order <= caps().enumeration_max
  bool is_trivial() const { return order() == 1; }

  ElementId identity() const;
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  u64 order_of(ElementId a) const;

  std::vector<ElementId> center() const;
  std::vector<u64> prime_divisors() const;
  bool is_p_group() const;       // |pi(G)| <= 1 (trivial group counts)
  bool is_nilpotent() const;     // coprime-order pairs all commute
  bool is_eppo() const;          // every element order is 1 or a prime power

  // <a> in power order a^0, a^1, ..., a^{o(a)-1}.
  std::vector<ElementId> cyclic_subgroup(ElementId a) const;
  // <a,b> for commuting a,b, sorted ascending. Throws for non-commuting
  // input and on violation of the |H| <= o(a)o(b) bound (internal bug).
  std::vector<ElementId> closure(ElementId a, ElementId b) const;

  std::string describe(ElementId a) const;

  // Permutation backend access.
  int degree() const;
  bool alternating_only() const;
  Perm to_perm(ElementId a) const;
  ElementId from_perm(const Perm& p) const;

  // Factored backend access.
  const std::vector<u64>& moduli() const;
  std::vector<u64> to_tuple(ElementId a) const;
  ElementId from_tuple(const std::vector<u64>& residues) const;

  // Residues of a split into prime-power components, grouped per prime.
  // Lets the adjacency kernel decide power membership and cyclicity block
  // by block without enumerating anything.
  struct PrimePart {
    u64 p;
    std::vector<u64> q;  // p^e component moduli
    std::vector<u64> r;  // residues mod q
  };
  std::vector<PrimePart> prime_parts(ElementId a) const;

  // Cayley backend access (row-major n*n table of ids).
  const std::vector<u32>& cayley_table() const;

  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

Group build_group(const GroupSpec& spec, const Caps& caps = {});
Group build_group(std::string_view spec_text, const Caps& caps = {});

// a^k by binary powering.
ElementId element_pow(const Group& g, ElementId a, u64 k);

// Cayley table file: optional '#' comment lines, then n, then n rows of n
// 0-based indices; entry (r,c) holds the index of (element r)*(element c).
Group import_cayley(const std::filesystem::path& path, const Caps& caps = {});
void export_cayley(const Group& g, const std::filesystem::path& path);

}  // namespace dg
