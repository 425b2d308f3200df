#include "gcx/lie.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "gcx/linalg.hpp"

namespace gcx {

namespace {

// Homogeneous element of T(V): word code (base n, first letter most
// significant) -> coefficient.
struct TElem {
  int w = 0;
  std::map<long, long> c;
};

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void add_to(std::map<long, long>& m, long k, long v) {
  if (!v) return;
  auto& x = m[k];
  x += v;
  if (!x) m.erase(k);
}

// Super bracket XY - (-1)^{|X||Y|} YX with |X| = parity * weight.
TElem bracket(const TElem& X, const TElem& Y, int n, int parity) {
  TElem Z;
  Z.w = X.w + Y.w;
  const long sx = ipow(n, X.w), sy = ipow(n, Y.w);
  const long sign = ((parity * X.w) & (parity * Y.w) & 1) ? -1 : 1;
  for (const auto& [x, a] : X.c)
    for (const auto& [y, b] : Y.c) {
      add_to(Z.c, x * sy + y, a * b);
      add_to(Z.c, y * sx + x, -sign * a * b);
    }
  return Z;
}

TElem generator(int i) {
  TElem X;
  X.w = 1;
  X.c[i] = 1;
  return X;
}

long span_rank(const std::vector<TElem>& v) {
  std::unordered_map<long, int> rowid;
  SparseIntMatrix M(0, int(v.size()));
  for (size_t j = 0; j < v.size(); ++j)
    for (const auto& [k, a] : v[j].c) {
      auto [it, fresh] = rowid.emplace(k, int(rowid.size()));
      M.col[j].push_back({it->second, a});
    }
  M.rows = int(rowid.size());
  M.normalize();
  return rank_exact(M).rank;
}

constexpr long kMaxWords = 2'000'000;

// dim (FreeLie(V)/<rels>)_w for w = 1..Wmax; rels homogeneous of any weight.
GradedDims quotient_dims(int n, int parity, const std::vector<TElem>& rels, int Wmax) {
  GradedDims free = free_lie_dims(n, parity, Wmax);
  GradedDims out;
  std::vector<TElem> ideal;  // spanning set of the ideal in the current weight
  for (int w = 1; w <= Wmax; ++w) {
    if (ipow(n, w) > kMaxWords) throw ResourceLimit("free Lie quotient: tensor degree too large", size_t(ipow(n, w)));
    std::vector<TElem> next;
    for (const auto& X : ideal)
      for (int i = 0; i < n; ++i) {
        auto Z = bracket(generator(i), X, n, parity);
        if (!Z.c.empty()) next.push_back(std::move(Z));
      }
    for (const auto& r : rels)
      if (r.w == w && !r.c.empty()) next.push_back(r);
    long rk = next.empty() ? 0 : span_rank(next);
    out.dim[w] = free.at(w) - rk;
    out.parity[w] = (parity * w) & 1;
    ideal = std::move(next);
  }
  return out;
}

TElem weight2_element(const std::vector<long>& coeffs, int n, int parity) {
  auto basis = weight2_basis(n, parity);
  if (coeffs.size() != basis.size()) throw std::invalid_argument("relation length does not match weight-2 basis");
  TElem r;
  r.w = 2;
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k]) continue;
    auto Z = bracket(generator(basis[k].first), generator(basis[k].second), n, parity);
    for (const auto& [key, a] : Z.c) add_to(r.c, key, a * coeffs[k]);
  }
  return r;
}

long binom(long n, long k) {
  if (k == 0) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Multiply series f by (1 + sign s^w)^d (odd) or (1 - sign s^w)^{-d} (even).
void mul_factor(std::vector<long>& f, int w, long d, long sign, bool odd) {
  const int N = int(f.size()) - 1;
  std::vector<long> g(N + 1, 0);
  for (int k = 0; k * w <= N; ++k) {
    long c = odd ? binom(d, k) : binom(d + k - 1, k);
    if (k % 2 && sign < 0) c = -c;
    if (!c) continue;
    for (int i = 0; i + k * w <= N; ++i) g[i + k * w] += c * f[i];
  }
  f = std::move(g);
}

}  // namespace

std::vector<std::pair<int, int>> weight2_basis(int n, int parity) {
  std::vector<std::pair<int, int>> b;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (i < j || (parity & 1)) b.push_back({i, j});
  return b;
}

GradedDims free_lie_dims(int n, int parity, int Wmax) {
  GradedDims L;
  for (int w = 1; w <= Wmax; ++w) {
    std::vector<long> f(w + 1, 0);
    f[0] = 1;
    for (int u = 1; u < w; ++u) {
      bool odd = (parity * u) & 1;
      mul_factor(f, u, L.at(u), 1, odd);
    }
    L.dim[w] = ipow(n, w) - f[w];
    L.parity[w] = (parity * w) & 1;
  }
  return L;
}

GradedDims free_lie_dims_explicit(int n, int parity, int Wmax) {
  GradedDims L;
  for (int w = 1; w <= Wmax; ++w) {
    if (ipow(n, w) > 200'000) throw ResourceLimit("free_lie_dims_explicit: too many brackets", size_t(ipow(n, w)));
    std::vector<TElem> br;
    for (long code = 0; code < ipow(n, w); ++code) {
      TElem X = generator(int(code % n));
      long c = code / n;
      for (int k = 1; k < w; ++k, c /= n) X = bracket(generator(int(c % n)), X, n, parity);
      if (!X.c.empty()) br.push_back(std::move(X));
    }
    L.dim[w] = br.empty() ? 0 : span_rank(br);
    L.parity[w] = (parity * w) & 1;
  }
  return L;
}

GradedDims free_lie_quotient_dims(const QuadraticPresentation& P, int Wmax) {
  std::vector<TElem> rels;
  for (const auto& r : P.R) rels.push_back(weight2_element(r, P.n, P.parity));
  if (Wmax >= 2 && !rels.empty() && span_rank(rels) != long(rels.size()))
    throw std::invalid_argument("relations are linearly dependent");
  return quotient_dims(P.n, P.parity, rels, Wmax);
}

QuadraticPresentation wg_presentation(int g, int m) {
  QuadraticPresentation P;
  P.n = 2 * g;
  P.parity = (1 - m) & 1;
  auto basis = weight2_basis(P.n, P.parity);
  // sum_{ij} g_ij [c_i,c_j] in the basis, using [c_j,c_i] = -(-1)^p [c_i,c_j]
  std::vector<long> r(basis.size(), 0);
  const long swap = P.parity ? 1 : -1;
  for (size_t k = 0; k < basis.size(); ++k) {
    auto [i, j] = basis[k];
    r[k] = i == j ? pairing(i, i, m) : pairing(i, j, m) + swap * pairing(j, i, m);
  }
  if (g > 0) P.R.push_back(r);
  return P;
}

GradedDims wg_dims(int g, int m, int Wmax) { return free_lie_quotient_dims(wg_presentation(g, m), Wmax); }

GradedDims wgfr_dims(int g, int m, int Wmax) {
  auto P = wg_presentation(g, m);
  const long k = 2 + ((m & 1) ? -2 : 2) * g;
  if (k == 0 || P.R.empty()) {
    // the relation does not involve c: w_g plus a central c in weight 2
    GradedDims out = wg_dims(g, m, Wmax);
    if (Wmax >= 2) {
      out.dim[2] += 1;
      if (P.parity) throw std::logic_error("wgfr_dims: central c of odd parity");
    }
    return out;
  }
  // c = r / k, and [c, c_i] = 0 becomes [r, c_i] = 0
  TElem r = weight2_element(P.R[0], P.n, P.parity);
  std::vector<TElem> rels;
  for (int i = 0; i < P.n; ++i) {
    auto Z = bracket(generator(i), r, P.n, P.parity);
    if (!Z.c.empty()) rels.push_back(std::move(Z));
  }
  return quotient_dims(P.n, P.parity, rels, Wmax);
}

std::vector<long> pbw_series(const GradedDims& L, int Wmax) {
  std::vector<long> f(Wmax + 1, 0);
  f[0] = 1;
  for (const auto& [w, d] : L.dim) {
    if (w < 1 || w > Wmax) continue;
    auto it = L.parity.find(w);
    bool odd = it != L.parity.end() && it->second;
    mul_factor(f, w, d, 1, odd);
  }
  return f;
}

std::vector<long> hilbert_series(const GradedDims& A, int Wmax) {
  std::vector<long> f(Wmax + 1, 0);
  f[0] = 1;
  for (int w = 1; w <= Wmax; ++w) f[w] = A.at(w);
  return f;
}

bool koszul_identity_check(const GradedDims& t0, const GradedDims& a, int parity, int Wmax) {
  GradedDims t = t0;
  for (const auto& [w, d] : t.dim)
    if (!t.parity.count(w)) t.parity[w] = (parity * w) & 1;
  auto hu = pbw_series(t, Wmax);
  auto ha = hilbert_series(a, Wmax);
  for (int k = 1; k < int(ha.size()); k += 2) ha[k] = -ha[k];
  for (int n = 1; n <= Wmax; ++n) {
    long s = 0;
    for (int i = 0; i <= n; ++i) s += hu[i] * ha[n - i];
    if (s != 0) return false;
  }
  return true;
}

std::map<int, long> symmetric_algebra_euler(const std::map<std::pair<int, int>, long>& gens, int m, int Wmax) {
  std::vector<long> f(Wmax + 1, 0);
  f[0] = 1;
  for (const auto& [key, d] : gens) {
    auto [W, E] = key;
    if (W < 1 || W > Wmax || !d) continue;
    bool odd = ((E + m * W) & 1) != 0;
    long sign = (E & 1) ? -1 : 1;
    mul_factor(f, W, d, sign, odd);
  }
  std::map<int, long> out;
  for (int w = 1; w <= Wmax; ++w) out[w] = f[w];
  return out;
}

std::map<std::pair<int, int>, long> connected_chain_dims(Variant v, int g, int m, int Wmax, const Limits& lim) {
  std::map<std::pair<int, int>, long> out;
  for (int W = 1; W <= Wmax; ++W) {
    auto B = enumerate_basis(ComplexSpec{v, Side::Connected, g, m, W}, lim);
    for (const auto& [E, s] : B.strata) out[{W, E}] = long(s.size());
  }
  return out;
}

long super_exterior_square(long n, int parity) { return (parity & 1) ? n * (n + 1) / 2 : n * (n - 1) / 2; }

}  // namespace gcx
