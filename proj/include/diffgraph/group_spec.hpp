#pragma once

#include <string>
#include <vector>

#include "diffgraph/ids.hpp"

namespace dg {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
  std::size_t pos;
};

// Abstract syntax for the group construction language:
//   Z<n>  D<n>  S<n>  A<n>  sd(Z<n>,Z<m>,<g>)  cayley(<path>)
// and infix 'x' for direct products (left-associative).
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Product, Semidirect, CayleyFile };

  Kind kind = Kind::Cyclic;
  u64 n = 0;                       // Z/D/S/A size, or sd base order
  u64 m = 0;                       // sd acting cyclic order
  u64 g = 0;                       // sd action exponent: a |-> a^g on Z_n
  std::vector<GroupSpec> factors;  // Product
  std::string path;                // CayleyFile

  std::string str() const;

  static GroupSpec cyclic(u64 n);
  static GroupSpec dihedral(u64 n);
  static GroupSpec symmetric(u64 n);
  static GroupSpec alternating(u64 n);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec semidirect(u64 n, u64 m, u64 g);  // validates the action
  static GroupSpec cayley_file(std::string path);
};

GroupSpec parse_spec(std::string_view text);

}  // namespace dg
