#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "gcx/graph.hpp"

namespace gcx::testing {

// Random decorated graph (concrete letters from 2g labels, optional omega and
// crossed items).  No admissibility constraints.
inline Graph random_concrete(std::mt19937& rng, int maxn, int maxe, int maxd, int g, bool with_omega,
                             bool with_cross) {
  Graph G;
  G.n = std::uniform_int_distribution<int>(1, maxn)(rng);
  int e = std::uniform_int_distribution<int>(0, maxe)(rng);
  int d = std::uniform_int_distribution<int>(0, maxd)(rng);
  std::uniform_int_distribution<int> vd(0, G.n - 1), ld(0, 2 * g - 1), coin(0, 5);
  for (int i = 0; i < e; ++i) G.items.push_back(edge(vd(rng), vd(rng)));
  for (int i = 0; i < d; ++i) {
    if (with_omega && coin(rng) == 0) G.items.push_back(omega(vd(rng)));
    else G.items.push_back(letter(vd(rng), ld(rng)));
  }
  if (with_cross) {
    int c = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < c; ++i) G.items.push_back(cross(ld(rng)));
  }
  std::shuffle(G.items.begin(), G.items.end(), rng);
  return G;
}

// Random two-colored graph with M legs, optional omegas and crossed nodes.
inline Graph random_formal(std::mt19937& rng, int maxn, int maxe, int maxpairs, int M, bool with_k) {
  Graph G;
  G.formal = true;
  G.n = std::uniform_int_distribution<int>(1, maxn)(rng);
  int e = std::uniform_int_distribution<int>(0, maxe)(rng);
  std::uniform_int_distribution<int> vd(0, G.n - 1), coin(0, 3);
  for (int i = 0; i < e; ++i) G.items.push_back(edge(vd(rng), vd(rng)));
  std::vector<Item> ends;
  int ncross = with_k ? std::uniform_int_distribution<int>(0, 2)(rng) : 0;
  for (int c = 0; c < ncross; ++c) ends.push_back(cross(0));
  for (int l = 0; l < M; ++l) ends.push_back(leg(l, 0));
  int p = std::uniform_int_distribution<int>(0, maxpairs)(rng);
  for (int i = 0; i < 2 * p; ++i) ends.push_back(letter(vd(rng), 0));
  if (ends.size() % 2) ends.push_back(letter(vd(rng), 0));
  for (auto& it : ends) it.lab = int16_t(G.new_token());
  std::vector<int> perm(ends.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (size_t i = 0; i + 1 < perm.size(); i += 2) G.pair_tokens(ends[perm[i]].lab, ends[perm[i + 1]].lab);
  for (auto& it : ends) G.items.push_back(it);
  if (with_k && coin(rng) == 0) G.items.push_back(omega(vd(rng)));
  std::vector<Item> legs, rest;
  for (auto& it : G.items) (it.kind == Kind::Leg ? legs : rest).push_back(it);
  std::shuffle(rest.begin(), rest.end(), rng);
  G.items = rest;
  // legs keep their relative order at the end, as in stable words
  std::sort(legs.begin(), legs.end(), [](const Item& a, const Item& b) { return a.a < b.a; });
  for (auto& it : legs) G.items.push_back(it);
  return G;
}

inline Relabeling random_relabeling(std::mt19937& rng, const Graph& G) {
  Relabeling r;
  r.vertex.resize(G.n);
  std::iota(r.vertex.begin(), r.vertex.end(), 0);
  std::shuffle(r.vertex.begin(), r.vertex.end(), rng);
  r.target.resize(G.items.size());
  std::iota(r.target.begin(), r.target.end(), 0);
  std::shuffle(r.target.begin(), r.target.end(), rng);
  return r;
}

}  // namespace gcx::testing
