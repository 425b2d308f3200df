#include <gmp.h>

#include <random>

#include "catch_amalgamated.hpp"
#include "gcx/linalg.hpp"

using namespace gcx;

namespace {
SparseIntMatrix dense(const std::vector<std::vector<int64_t>>& a) {
  SparseIntMatrix M(int(a.size()), a.empty() ? 0 : int(a[0].size()));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c)
      if (a[r][c]) M.add(r, c, a[r][c]);
  M.normalize();
  return M;
}

SparseIntMatrix random_product(std::mt19937_64& rng, int maxdim, int range) {
  std::uniform_int_distribution<int> dim(1, maxdim), val(-range, range), coin(0, 3);
  int rows = dim(rng), inner = dim(rng), cols = dim(rng);
  SparseIntMatrix A(rows, inner), B(inner, cols);
  for (int c = 0; c < inner; ++c)
    for (int r = 0; r < rows; ++r)
      if (!coin(rng)) A.add(r, c, val(rng));
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < inner; ++r)
      if (!coin(rng)) B.add(r, c, val(rng));
  A.normalize();
  B.normalize();
  return multiply(A, B);
}
}  // namespace

TEST_CASE("prime pool holds 31-bit primes") {
  mpz_t z;
  mpz_init(z);
  for (uint32_t p : prime_pool()) {
    CHECK(p > (1u << 30));
    CHECK(p < (1u << 31));
    mpz_set_ui(z, p);
    CHECK(mpz_probab_prime_p(z, 30) > 0);
  }
  mpz_clear(z);
  CHECK(prime_pool().size() >= 8);
}

TEST_CASE("ranks of small matrices") {
  CHECK(rank_bareiss(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_rational(dense({{1, 2}, {3, 4}})) == 2);
  CHECK(rank_modp(dense({{2, 0}, {0, 3}}), 2) == 1);
  CHECK(rank_exact(SparseIntMatrix(3, 0)).rank == 0);
  CHECK(rank_exact(SparseIntMatrix(0, 4)).rank == 0);
}

TEST_CASE("modular, fraction-free and rational ranks agree") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto M = random_product(rng, 25, 4);
    long b = rank_bareiss(M);
    CHECK(rank_rational(M) == b);
    CHECK(rank_modp(M, prime_pool()[0]) == b);
    auto r = rank_exact(M);
    CHECK(r.rank == b);
    CHECK(r.certified == (M.nnz() <= RankOptions{}.certify_nnz));
  }
}

TEST_CASE("an unlucky prime is outvoted") {
  const uint32_t p = prime_pool()[0];
  SparseIntMatrix M(1, 1);
  M.add(0, 0, int64_t(p));
  M.normalize();
  RankOptions ro;
  ro.primes = {p};
  ro.certify_nnz = 0;
  auto r = rank_exact(M, ro);
  CHECK(r.rank == 1);
  CHECK(r.primes_used.size() >= 3);
  CHECK(r.primes_used[0] == p);
}

TEST_CASE("transpose and multiply") {
  auto A = dense({{1, 2, 0}, {0, 1, -1}});
  auto B = dense({{1}, {1}, {1}});
  CHECK(multiply(A, B) == dense({{3}, {0}}));
  CHECK(A.transpose().transpose() == A);
  CHECK(A.nnz() == 4);
}
