#pragma once

#include "diffgraph/group.hpp"

namespace dg {

// Pairwise adjacency in the three graphs on G. pow implies epow; diff is
// epow minus pow.
struct AdjacencyVerdict {
  bool pow = false;
  bool epow = false;
  bool diff = false;
};

// a in <b> or b in <a>. Membership semantics for a == b (trivially true).
bool pow_adjacent(const Group& g, ElementId a, ElementId b);

// <a,b> is cyclic. Non-commuting pairs are rejected without any closure
// work; factored-abelian groups are decided blockwise per prime.
bool is_cyclic_pair(const Group& g, ElementId a, ElementId b);

// Adjacent in the difference graph: cyclic pair but not powers of each
// other. Applies fast rejections (non-commuting; both orders powers of the
// same prime) and the coprime-commuting shortcut before falling back to the
// closure route.
bool diff_adjacent(const Group& g, ElementId a, ElementId b);

AdjacencyVerdict classify_pair(const Group& g, ElementId a, ElementId b);

// Definitional route with no shortcuts: full power-walk membership for pow,
// closure + max-element-order for epow. The verify suite re-validates the
// optimized kernel against this on a seeded pair sample each run.
bool diff_adjacent_reference(const Group& g, ElementId a, ElementId b);

}  // namespace dg
