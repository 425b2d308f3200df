#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int64_t>>> col;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), col(c) {}
  size_t nnz() const;
  void add(int r, int c, int64_t v);  // accumulate, then call normalize()
  void normalize();
  SparseIntMatrix transpose() const;
  bool operator==(const SparseIntMatrix&) const = default;
};

// Published pool of 31-bit primes (all > 2^30).
const std::vector<uint32_t>& prime_pool();

// Rank over F_p: sparse elimination, pivot column chosen by least column count.
long rank_modp(const SparseIntMatrix& M, uint32_t p);

// Rank over Q by sparse rational elimination (exact, slow).
long rank_rational(const SparseIntMatrix& M);

// Rank over Q by dense Bareiss fraction-free elimination (exact, small inputs).
long rank_bareiss(const SparseIntMatrix& M);

enum class RankMethod { FractionFree, ModularConsensus };

struct RankResult {
  long rank = 0;
  RankMethod method = RankMethod::ModularConsensus;
  std::vector<uint32_t> primes_used;
  bool certified = false;
};

struct RankOptions {
  uint64_t seed = 1;
  size_t certify_nnz = 2000;       // exact verification at or below this many nonzeros
  std::vector<uint32_t> primes;    // tried first, before the seeded draw from the pool
};

// Modular consensus: a value is accepted once two primes report it and no
// prime reported a larger rank.  Throws when the pool runs out.
RankResult rank_exact(const SparseIntMatrix& M, const RankOptions& opt = {});

// Product A*B (used by d^2 checks on assembled blocks).
SparseIntMatrix multiply(const SparseIntMatrix& A, const SparseIntMatrix& B);

}  // namespace gcx
