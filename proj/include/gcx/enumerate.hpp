#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// One finite graded piece: (variant, side, g, parity of m, weight W).
// m is stored as a representative (1 or 2); only its parity is used.
struct ComplexSpec {
  Variant variant = Variant::GC1;
  Side side = Side::Connected;
  int g = 0;
  int m = 1;
  int W = 1;
};

// Two-coloured invariant complexes with M labelled legs.  g enters the K
// differential only (dashed tadpole contraction).
struct StableSpec {
  Family family = Family::J;
  int M = 0;
  int W = 1;
  int m = 1;
};

// Strata by E-number, each sorted by encoding.
struct ChainBasis {
  std::map<int, std::vector<std::string>> strata;

  size_t size(int E) const {
    auto it = strata.find(E);
    return it == strata.end() ? 0 : it->second.size();
  }
  size_t total() const {
    size_t s = 0;
    for (const auto& [E, v] : strata) s += v.size();
    return s;
  }
  bool operator==(const ChainBasis&) const = default;
};

struct Limits {
  size_t max_stratum = 20'000'000;
  int max_vertices = 8;
};

class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, size_t produced) : std::runtime_error(what), produced(produced) {}
  size_t produced;
};

ChainBasis enumerate_basis(const ComplexSpec& spec, const Limits& lim = {});
ChainBasis enumerate_stable_basis(const StableSpec& spec, const Limits& lim = {});

// Independent slow generator: every labelled multigraph with every decoration
// multiset, filtered by is_admissible.  Test oracle only (g <= 2, W <= 2).
ChainBasis enumerate_basis_naive(const ComplexSpec& spec);

// Disjoint union of graphs (vertices and tokens shifted).
Graph disjoint_union(const std::vector<Graph>& parts);

}  // namespace gcx
