#include "gcx/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

namespace gcx {

size_t SparseIntMatrix::nnz() const {
  size_t s = 0;
  for (const auto& c : col) s += c.size();
  return s;
}

void SparseIntMatrix::add(int r, int c, int64_t v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseIntMatrix::add");
  col[c].push_back({r, v});
}

void SparseIntMatrix::normalize() {
  for (auto& c : col) {
    std::sort(c.begin(), c.end());
    std::vector<std::pair<int, int64_t>> out;
    for (const auto& [r, v] : c) {
      if (!out.empty() && out.back().first == r) out.back().second += v;
      else out.push_back({r, v});
    }
    std::erase_if(out, [](const auto& x) { return x.second == 0; });
    c = std::move(out);
  }
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix T(cols, rows);
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : col[c]) T.col[r].push_back({c, v});
  return T;
}

SparseIntMatrix multiply(const SparseIntMatrix& A, const SparseIntMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseIntMatrix C(A.rows, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    std::map<int, int64_t> acc;
    for (const auto& [k, b] : B.col[j])
      for (const auto& [i, a] : A.col[k]) acc[i] += a * b;
    for (const auto& [i, v] : acc)
      if (v) C.col[j].push_back({i, v});
  }
  return C;
}

const std::vector<uint32_t>& prime_pool() {
  static const std::vector<uint32_t> pool = {
      2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u,
      2147483543u, 2147483497u, 2147483489u, 2147483477u, 2147483423u, 2147483399u,
      2147483353u, 2147483323u, 2147483269u, 2147483249u, 2147483237u, 2147483179u,
  };
  return pool;
}

namespace {

struct ModP {
  using T = uint64_t;
  uint64_t p;
  T from(int64_t v) const {
    int64_t r = v % int64_t(p);
    return T(r < 0 ? r + int64_t(p) : r);
  }
  bool zero(const T& x) const { return x == 0; }
  T mul(const T& a, const T& b) const { return a * b % p; }
  T sub(const T& a, const T& b) const { return a >= b ? a - b : a + p - b; }
  T inv(T a) const {
    T r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
};

struct Rat {
  using T = mpq_class;
  T from(int64_t v) const { return T(long(v)); }
  bool zero(const T& x) const { return sgn(x) == 0; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T inv(const T& a) const { return T(1) / a; }
};

// Incremental elimination over a field.  Columns of M are reduced one at a
// time against the pivots created so far.  Pivots are applied in order of
// creation: a pivot vector is reduced against all earlier pivots, so applying
// pivot k can only introduce pivot columns of later pivots, which keeps the
// heap-driven reduction finite.
template <class F>
long eliminate(const SparseIntMatrix& M, const F& f) {
  using T = typename F::T;
  const int R = M.rows;
  std::vector<int> count(R, 0);
  for (const auto& c : M.col)
    for (const auto& e : c) count[e.first]++;
  std::vector<int> order(M.cols);
  for (int j = 0; j < M.cols; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return M.col[a].size() < M.col[b].size(); });

  std::vector<int> pivot_of_row(R, -1);  // row index -> pivot number
  std::vector<std::vector<std::pair<int, T>>> piv;  // normalized, pivot entry first
  std::vector<T> acc(R);
  std::vector<char> touched(R, 0);
  std::vector<int> tlist;
  std::vector<char> queued;

  for (int j : order) {
    if (M.col[j].empty()) continue;
    tlist.clear();
    std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
    queued.assign(piv.size(), 0);
    auto touch = [&](int r) {
      if (!touched[r]) {
        touched[r] = 1;
        tlist.push_back(r);
      }
      int k = pivot_of_row[r];
      if (k >= 0 && !queued[k]) {
        queued[k] = 1;
        heap.push(k);
      }
    };
    for (const auto& [r, v] : M.col[j]) {
      acc[r] = f.from(v);
      touch(r);
    }
    while (!heap.empty()) {
      int k = heap.top();
      heap.pop();
      const auto& P = piv[k];
      int pr = P[0].first;
      if (f.zero(acc[pr])) continue;
      T c = acc[pr];
      for (const auto& [r, v] : P) {
        if (!touched[r]) acc[r] = f.from(0);
        acc[r] = f.sub(acc[r], f.mul(c, v));
        touch(r);
      }
    }
    int best = -1;
    for (int r : tlist)
      if (!f.zero(acc[r]) && pivot_of_row[r] < 0 && (best < 0 || count[r] < count[best] || (count[r] == count[best] && r < best)))
        best = r;
    if (best >= 0) {
      T inv = f.inv(acc[best]);
      std::vector<std::pair<int, T>> P;
      P.push_back({best, f.from(1)});
      std::sort(tlist.begin(), tlist.end());
      for (int r : tlist)
        if (r != best && !f.zero(acc[r])) P.push_back({r, f.mul(acc[r], inv)});
      pivot_of_row[best] = int(piv.size());
      piv.push_back(std::move(P));
    }
    for (int r : tlist) {
      touched[r] = 0;
      acc[r] = f.from(0);
    }
  }
  return long(piv.size());
}

}  // namespace

long rank_modp(const SparseIntMatrix& M, uint32_t p) { return eliminate(M, ModP{p}); }

long rank_rational(const SparseIntMatrix& M) { return eliminate(M, Rat{}); }

long rank_bareiss(const SparseIntMatrix& M) {
  const int R = M.rows, C = M.cols;
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C, 0));
  for (int c = 0; c < C; ++c)
    for (const auto& [r, v] : M.col[c]) a[r][c] = long(v);
  mpz_class prev = 1;
  long rank = 0;
  int row = 0;
  for (int c = 0; c < C && row < R; ++c) {
    int p = -1;
    for (int r = row; r < R; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int r = row + 1; r < R; ++r) {
      for (int k = c + 1; k < C; ++k) {
        a[r][k] = a[row][c] * a[r][k] - a[r][c] * a[row][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[row][c];
    ++row;
    ++rank;
  }
  return rank;
}

RankResult rank_exact(const SparseIntMatrix& M, const RankOptions& opt) {
  RankResult res;
  std::vector<uint32_t> seq = opt.primes;
  {
    std::vector<uint32_t> pool = prime_pool();
    std::mt19937_64 rng(opt.seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (uint32_t p : pool)
      if (std::find(seq.begin(), seq.end(), p) == seq.end()) seq.push_back(p);
  }
  std::map<long, int> seen;
  size_t next = 0;
  auto accepted = [&]() -> long {
    if (seen.empty()) return -1;
    auto top = std::prev(seen.end());
    return top->second >= 2 ? top->first : -1;
  };
  // first two primes run concurrently
  {
    long r[2] = {-1, -1};
    int k = int(std::min<size_t>(2, seq.size()));
#pragma omp parallel for
    for (int i = 0; i < k; ++i) r[i] = rank_modp(M, seq[i]);
    for (int i = 0; i < k; ++i) {
      seen[r[i]]++;
      res.primes_used.push_back(seq[i]);
    }
    next = k;
  }
  while (accepted() < 0) {
    if (next >= seq.size()) throw std::runtime_error("rank_exact: prime pool exhausted without consensus");
    long r = rank_modp(M, seq[next]);
    seen[r]++;
    res.primes_used.push_back(seq[next]);
    ++next;
  }
  res.rank = accepted();
  res.method = RankMethod::ModularConsensus;
  if (M.nnz() <= opt.certify_nnz) {
    long q = (long(M.rows) * M.cols <= 250000) ? rank_bareiss(M) : rank_rational(M);
    if (q != res.rank) throw std::runtime_error("rank_exact: modular consensus disagrees with exact rank");
    res.method = RankMethod::FractionFree;
    res.certified = true;
  }
  return res;
}

}  // namespace gcx
