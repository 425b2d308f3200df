#pragma once

#include <string>

#include "gcx/graph.hpp"

namespace gcx {

// Canonical isomorphism class with the sign relating the input word to the
// canonical word: G = sign * decode(enc).  sign == 0 marks an odd symmetry.
struct CanonicalClass {
  std::string enc;
  int sign = 0;
};

// Colour refinement followed by a full individualize-refine search; the least
// leaf code wins, and two least leaves with different signs give Zero.
CanonicalClass canonical_form(const Graph& G, int m);

// Same contract, minimum taken over all permutations of the movable nodes.
// Exponential; used as a test oracle.
CanonicalClass canonical_form_bruteforce(const Graph& G, int m);

// Canonical word described by an encoding (the class representative).
Graph decode(const std::string& enc);

// Number of leaves explored by the last canonical_form call on this thread.
long last_search_leaves();

}  // namespace gcx
