#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "gcx/linalg.hpp"

namespace gcx {

// Plain multigraph on vertices 0..N-1; self-loops allowed.
struct CoreGraph {
  int N = 1;
  std::vector<std::pair<int, int>> edges;
};

// Two-colourings of the edges whose solid subgraph connects all N vertices.
// A colouring is a bitmask over edges (bit set = solid); degree = -#solid.
struct CGamma {
  CoreGraph core;
  std::map<int, std::vector<uint32_t>> basis;  // degree -> sorted masks
};

CGamma build_cgamma(const CoreGraph& core);

// d : degree k -> k+1 turns one solid edge dashed, sign (-1)^(solid edges
// before it).  Solid-disconnected results are dropped.
std::map<int, SparseIntMatrix> cgamma_differential(const CGamma& C);

// Cohomology dimension by degree (all degrees with a nonzero basis listed).
std::map<int, long> cgamma_cohomology(const CoreGraph& core);

// Connected core with 1 <= N <= maxN vertices and N-1 <= k <= maxK edges.
CoreGraph random_core(std::mt19937_64& rng, int maxN, int maxK, bool loops = true);

}  // namespace gcx
