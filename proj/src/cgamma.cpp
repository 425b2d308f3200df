#include "gcx/cgamma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gcx {

namespace {

bool solid_connected(const CoreGraph& c, uint32_t mask) {
  std::vector<int> parent(c.N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = c.N;
  for (size_t i = 0; i < c.edges.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    int a = find(c.edges[i].first), b = find(c.edges[i].second);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

CGamma build_cgamma(const CoreGraph& core) {
  if (core.N < 1) throw std::invalid_argument("core needs at least one vertex");
  if (core.edges.size() > 24) throw std::invalid_argument("core has too many edges");
  for (auto [a, b] : core.edges)
    if (a < 0 || b < 0 || a >= core.N || b >= core.N) throw std::invalid_argument("core edge out of range");
  CGamma C;
  C.core = core;
  const uint32_t k = uint32_t(core.edges.size());
  for (uint32_t mask = 0; mask < (1u << k); ++mask)
    if (solid_connected(core, mask)) C.basis[-__builtin_popcount(mask)].push_back(mask);
  return C;
}

std::map<int, SparseIntMatrix> cgamma_differential(const CGamma& C) {
  std::map<int, SparseIntMatrix> out;
  const int k = int(C.core.edges.size());
  for (const auto& [deg, src] : C.basis) {
    auto it = C.basis.find(deg + 1);
    static const std::vector<uint32_t> none;
    const auto& tgt = it == C.basis.end() ? none : it->second;
    std::unordered_map<uint32_t, int> idx;
    for (size_t i = 0; i < tgt.size(); ++i) idx[tgt[i]] = int(i);
    SparseIntMatrix M(int(tgt.size()), int(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
      int before = 0;
      for (int e = 0; e < k; ++e) {
        if (!(src[j] >> e & 1)) continue;
        auto f = idx.find(src[j] & ~(1u << e));
        if (f != idx.end()) M.col[j].push_back({f->second, before % 2 ? -1 : 1});
        ++before;
      }
    }
    M.normalize();
    out[deg] = std::move(M);
  }
  return out;
}

std::map<int, long> cgamma_cohomology(const CoreGraph& core) {
  auto C = build_cgamma(core);
  auto d = cgamma_differential(C);
  std::map<int, long> rank;
  for (const auto& [deg, M] : d) rank[deg] = M.cols ? rank_exact(M).rank : 0;
  std::map<int, long> H;
  for (const auto& [deg, b] : C.basis) {
    long in = rank.count(deg - 1) ? rank[deg - 1] : 0;
    H[deg] = long(b.size()) - rank[deg] - in;
  }
  return H;
}

CoreGraph random_core(std::mt19937_64& rng, int maxN, int maxK, bool loops) {
  if (maxN < 1 || maxK < maxN - 1) throw std::invalid_argument("random_core: bad bounds");
  CoreGraph c;
  c.N = std::uniform_int_distribution<int>(1, maxN)(rng);
  int k = std::uniform_int_distribution<int>(c.N - 1, maxK)(rng);
  if (c.N == 1 && !loops) k = 0;
  // random spanning tree, then extra edges
  for (int v = 1; v < c.N; ++v) c.edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  std::uniform_int_distribution<int> pick(0, c.N - 1);
  while (int(c.edges.size()) < k) {
    int a = pick(rng), b = pick(rng);
    if (a == b && !loops) continue;
    c.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::shuffle(c.edges.begin(), c.edges.end(), rng);
  return c;
}

}  // namespace gcx
