#include "gcx/rep.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gcx/canon.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

Group group_for_parity(int m) { return (m & 1) ? Group::Sp : Group::O; }

std::string to_string(Group G) { return G == Group::Sp ? "Sp" : "O"; }

Weight from_fundamental(const std::vector<int>& coeffs, int g) {
  if (int(coeffs.size()) > g) {
    for (size_t k = g; k < coeffs.size(); ++k)
      if (coeffs[k]) throw std::invalid_argument("weight exceeds rank");
  }
  Weight mu(g, 0);
  for (size_t k = 0; k < coeffs.size() && int(k) < g; ++k)
    for (size_t i = 0; i <= k; ++i) mu[i] += coeffs[k];
  return mu;
}

std::vector<int> to_fundamental(const Weight& mu) {
  std::vector<int> a(mu.size(), 0);
  for (size_t i = 0; i < mu.size(); ++i) a[i] = mu[i] - (i + 1 < mu.size() ? mu[i + 1] : 0);
  return a;
}

std::string weight_label(const Weight& mu) {
  auto a = to_fundamental(mu);
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += "+";
    if (a[i] != 1) s += std::to_string(a[i]);
    s += "λ" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Weight parse_weight_label(const std::string& s, int g) {
  std::vector<int> a(std::max(g, 1), 0);
  if (s == "0") return Weight(g, 0);
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    auto pos = term.find("λ");
    size_t skip = 2;
    if (pos == std::string::npos) {
      pos = term.find('l');
      skip = 1;
    }
    if (pos == std::string::npos) throw std::invalid_argument("bad weight label: " + s);
    int c = pos == 0 ? 1 : std::stoi(term.substr(0, pos));
    int k = std::stoi(term.substr(pos + skip));
    if (k < 1) throw std::invalid_argument("bad weight label: " + s);
    if (k > int(a.size())) a.resize(k, 0);
    a[k - 1] += c;
  }
  return from_fundamental(a, g);
}

void Character::add(const Weight& w, long c) {
  if (!c) return;
  auto& x = mult[w];
  x += c;
  if (!x) mult.erase(w);
}

long Character::dimension() const {
  long s = 0;
  for (const auto& [w, c] : mult) s += c;
  return s;
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  for (const auto& [w, c] : o.mult) r.add(w, c);
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  for (const auto& [w, c] : o.mult) r.add(w, -c);
  return r;
}

Character Character::operator*(const Character& o) const {
  Character r(g);
  Weight s(g);
  for (const auto& [w1, c1] : mult)
    for (const auto& [w2, c2] : o.mult) {
      for (int i = 0; i < g; ++i) s[i] = w1[i] + w2[i];
      r.add(s, c1 * c2);
    }
  return r;
}

Character Character::scaled(long c) const {
  Character r(g);
  for (const auto& [w, x] : mult) r.add(w, x * c);
  return r;
}

Character Character::adams(int k) const {
  Character r(g);
  for (const auto& [w, c] : mult) {
    Weight v = w;
    for (int& x : v) x *= k;
    r.add(v, c);
  }
  return r;
}

Character defining_character(int g) {
  Character chi(g);
  for (int i = 0; i < g; ++i) {
    Weight w(g, 0);
    w[i] = 1;
    chi.add(w, 1);
    w[i] = -1;
    chi.add(w, 1);
  }
  return chi;
}

namespace {

Character exact_div(const Character& chi, long k) {
  Character r(chi.g);
  for (const auto& [w, c] : chi.mult) {
    if (c % k) throw std::logic_error("character division not exact");
    r.add(w, c / k);
  }
  return r;
}

Character unit(int g) {
  Character one(g);
  one.add(Weight(g, 0), 1);
  return one;
}

}  // namespace

Character exterior_power(const Character& chi, int k) {
  std::vector<Character> e{unit(chi.g)};
  for (int n = 1; n <= k; ++n) {
    Character acc(chi.g);
    for (int i = 1; i <= n; ++i) {
      Character t = e[n - i] * chi.adams(i);
      acc = (i % 2) ? acc + t : acc - t;
    }
    e.push_back(exact_div(acc, n));
  }
  return e[k];
}

Character symmetric_power(const Character& chi, int k) {
  std::vector<Character> h{unit(chi.g)};
  for (int n = 1; n <= k; ++n) {
    Character acc(chi.g);
    for (int i = 1; i <= n; ++i) acc = acc + h[n - i] * chi.adams(i);
    h.push_back(exact_div(acc, n));
  }
  return h[k];
}

namespace {

bool is_partition(const Weight& mu) {
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) return false;
    if (i + 1 < mu.size() && mu[i] < mu[i + 1]) return false;
  }
  return true;
}

Weight pad(const Weight& mu, int g) {
  Weight r(g, 0);
  for (size_t i = 0; i < mu.size(); ++i) {
    if (int(i) < g) r[i] = mu[i];
    else if (mu[i]) throw std::invalid_argument("weight exceeds rank");
  }
  return r;
}

struct RootSystem {
  bool typeC;  // else type D
  int g;
  std::vector<Weight> pos;
  Weight rho;
};

RootSystem roots(bool typeC, int g) {
  RootSystem R{typeC, g, {}, Weight(g, 0)};
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      Weight a(g, 0);
      a[i] = 1;
      a[j] = -1;
      R.pos.push_back(a);
      a[j] = 1;
      R.pos.push_back(a);
    }
  if (typeC)
    for (int i = 0; i < g; ++i) {
      Weight a(g, 0);
      a[i] = 2;
      R.pos.push_back(a);
    }
  for (int i = 0; i < g; ++i) R.rho[i] = typeC ? g - i : g - 1 - i;
  return R;
}

long dot(const Weight& a, const Weight& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += long(a[i]) * b[i];
  return s;
}

// Dominant representative under the Weyl group of type C (all signed
// permutations) or D (even number of sign changes).
Weight dominant(const Weight& w, bool typeC) {
  Weight r(w.size());
  int neg = 0;
  bool zero = false;
  for (size_t i = 0; i < w.size(); ++i) {
    r[i] = std::abs(w[i]);
    if (w[i] < 0) ++neg;
    if (w[i] == 0) zero = true;
  }
  std::sort(r.begin(), r.end(), std::greater<int>());
  if (!typeC && !zero && (neg % 2) && !r.empty()) r.back() = -r.back();
  return r;
}

// lambda - mu as a nonnegative integer combination of simple roots?
bool below(const Weight& lambda, const Weight& mu, bool typeC) {
  const int g = int(lambda.size());
  std::vector<long> d(g);
  for (int i = 0; i < g; ++i) d[i] = lambda[i] - mu[i];
  if (!typeC && g == 1) return d[0] == 0;
  if (typeC) {
    long s = 0;
    for (int k = 0; k < g - 1; ++k) {
      s += d[k];
      if (s < 0) return false;
    }
    s += d[g - 1];
    return s >= 0 && s % 2 == 0;
  }
  long P = 0;
  for (int k = 0; k < g - 2; ++k) {
    P += d[k];
    if (P < 0) return false;
  }
  long a = P + d[g - 2] - d[g - 1], b = P + d[g - 2] + d[g - 1];
  return a >= 0 && b >= 0 && a % 2 == 0 && b % 2 == 0;
}

std::vector<Weight> orbit(const Weight& dom, bool typeC) {
  std::vector<int> absv(dom.size());
  for (size_t i = 0; i < dom.size(); ++i) absv[i] = std::abs(dom[i]);
  std::sort(absv.begin(), absv.end());
  bool zero = std::find(absv.begin(), absv.end(), 0) != absv.end();
  int want = (!dom.empty() && dom.back() < 0) ? 1 : 0;
  std::vector<Weight> out;
  do {
    std::vector<int> nz;
    for (size_t i = 0; i < absv.size(); ++i)
      if (absv[i]) nz.push_back(int(i));
    for (long mask = 0; mask < (1L << nz.size()); ++mask) {
      if (!typeC && !zero && (__builtin_popcountl(mask) % 2) != want) continue;
      Weight w(absv.begin(), absv.end());
      for (size_t k = 0; k < nz.size(); ++k)
        if (mask >> k & 1) w[nz[k]] = -w[nz[k]];
      out.push_back(w);
    }
  } while (std::next_permutation(absv.begin(), absv.end()));
  return out;
}

// Dominant weight multiplicities by Freudenthal's formula.
std::map<Weight, long> freudenthal(const RootSystem& R, const Weight& lambda) {
  const int g = R.g;
  const bool C = R.typeC;
  const int top = g ? std::abs(lambda[0]) : 0;
  // candidate dominant weights
  std::vector<Weight> cand;
  Weight cur(g);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == g) {
      if (below(lambda, cur, C)) cand.push_back(cur);
      return;
    }
    int lo = (!C && i == g - 1 && g >= 1) ? -maxv : 0;
    if (!C && i == g - 1 && g == 1) lo = -maxv;
    for (int v = maxv; v >= lo; --v) {
      cur[i] = v;
      rec(i + 1, std::abs(v));
    }
  };
  rec(0, top);
  // closer to lambda first: by height = (lambda - mu, rho_check-ish); use |lambda|-|mu| then lex
  auto height = [&](const Weight& mu) {
    long s = 0;
    for (int i = 0; i < g; ++i) s += long(lambda[i] - mu[i]) * (g - i);
    return s;
  };
  std::sort(cand.begin(), cand.end(), [&](const Weight& a, const Weight& b) {
    long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  std::map<Weight, long> m;
  Weight lr(g);
  for (int i = 0; i < g; ++i) lr[i] = lambda[i] + R.rho[i];
  const long lnorm = dot(lr, lr);
  for (const auto& mu : cand) {
    if (mu == lambda) {
      m[mu] = 1;
      continue;
    }
    Weight mr(g);
    for (int i = 0; i < g; ++i) mr[i] = mu[i] + R.rho[i];
    long denom = lnorm - dot(mr, mr);
    long num = 0;
    for (const auto& a : R.pos) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        bool out = false;
        for (int i = 0; i < g; ++i) {
          nu[i] += a[i];
          if (std::abs(nu[i]) > top) out = true;
        }
        if (out) break;
        auto it = m.find(dominant(nu, C));
        if (it == m.end()) continue;
        num += dot(nu, a) * it->second;
      }
    }
    num *= 2;
    if (denom <= 0 || num % denom) throw std::logic_error("Freudenthal recursion failed");
    if (num) m[mu] = num / denom;
  }
  return m;
}

long weyl_dim_type(bool typeC, const Weight& mu, int g) {
  if (!typeC && g == 1) return 1;
  auto R = roots(typeC, g);
  mpq_class p = 1;
  Weight lr(g);
  for (int i = 0; i < g; ++i) lr[i] = mu[i] + R.rho[i];
  for (const auto& a : R.pos) {
    mpq_class f(dot(lr, a), dot(R.rho, a));
    f.canonicalize();
    p *= f;
  }
  if (p.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return p.get_num().get_si();
}

}  // namespace

long weyl_dim(Group G, const Weight& mu0, int g) {
  if (g < 0) throw std::invalid_argument("negative rank");
  Weight mu = pad(mu0, g);
  if (!is_partition(mu)) throw std::invalid_argument("highest weight must be a partition");
  if (g == 0) return 1;
  if (G == Group::Sp) return weyl_dim_type(true, mu, g);
  long d = weyl_dim_type(false, mu, g);
  return mu[g - 1] > 0 ? 2 * d : d;
}

long weyl_dim_or_zero(Group G, const Weight& mu, int g) {
  try {
    return weyl_dim(G, mu, g);
  } catch (const std::invalid_argument&) {
    return 0;
  }
}

Character irreducible_character(Group G, const Weight& mu0, int g) {
  Weight mu = pad(mu0, g);
  if (!is_partition(mu)) throw std::invalid_argument("highest weight must be a partition");
  Character chi(g);
  if (g == 0) {
    chi.add({}, 1);
    return chi;
  }
  const bool C = G == Group::Sp;
  auto R = roots(C, g);
  auto add_irrep = [&](const Weight& lambda) {
    for (const auto& [dom, c] : freudenthal(R, lambda))
      for (const auto& w : orbit(dom, C)) chi.add(w, c);
  };
  add_irrep(mu);
  if (!C && mu[g - 1] > 0) {
    Weight s = mu;
    s[g - 1] = -s[g - 1];
    add_irrep(s);
  }
  return chi;
}

std::vector<std::pair<Weight, long>> decompose(Group G, const Character& chi0) {
  const int g = chi0.g;
  // both groups: symmetric under all signed permutations
  for (const auto& [w, c] : chi0.mult) {
    auto it = chi0.mult.find(dominant(w, true));
    if (it == chi0.mult.end() || it->second != c) throw std::invalid_argument("character is not Weyl-symmetric");
  }
  Character chi = chi0;
  std::vector<std::pair<Weight, long>> out;
  while (!chi.empty()) {
    const Weight top = std::prev(chi.mult.end())->first;  // lexicographically largest, dominant
    long c = chi.mult.at(top);
    auto irr = irreducible_character(G, top, g);
    chi = chi - irr.scaled(c);
    out.push_back({top, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Character chain_character(const std::vector<std::string>& stratum, int g) {
  Character chi(g);
  for (const auto& enc : stratum) {
    Graph G = decode(enc);
    Weight w(g, 0);
    for (const auto& it : G.items)
      if (it.kind == Kind::Letter || it.kind == Kind::Cross || it.kind == Kind::Leg)
        w[letter_var(it.lab)] += letter_is_a(it.lab) ? 1 : -1;
    chi.add(w, 1);
  }
  return chi;
}

Character equivariant_euler(const ChainBasis& B, int g) {
  Character chi(g);
  for (const auto& [E, stratum] : B.strata) {
    auto c = chain_character(stratum, g);
    chi = (E % 2 == 0) ? chi + c : chi - c;
  }
  return chi;
}

long matching_count(int N) {
  long r = 1;
  for (int k = 2 * N - 1; k > 1; k -= 2) r *= k;
  return r;
}

namespace {

// Multiplicity of the trivial representation of the connected group of type
// C or D in chi: sum_w det(w) chi(rho - w rho).
long trivial_multiplicity(bool typeC, const Character& chi) {
  const int g = chi.g;
  if (g == 0) {
    auto it = chi.mult.find(Weight{});
    return it == chi.mult.end() ? 0 : it->second;
  }
  auto R = roots(typeC, g);
  std::vector<int> perm(g);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j) inv += perm[i] > perm[j];
    for (long mask = 0; mask < (1L << g); ++mask) {
      int flips = __builtin_popcountl(mask);
      if (!typeC && flips % 2) continue;
      Weight w(g);
      for (int i = 0; i < g; ++i) {
        int v = R.rho[perm[i]];
        w[i] = R.rho[i] - ((mask >> i & 1) ? -v : v);
      }
      auto it = chi.mult.find(w);
      if (it == chi.mult.end()) continue;
      int sgn = ((inv + flips) % 2) ? -1 : 1;
      total += sgn * it->second;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Character power(const Character& chi, int k) {
  Character r = unit(chi.g);
  for (int i = 0; i < k; ++i) r = r * chi;
  return r;
}

long invariant_dim_sp(int g, int N) {
  if (g == 0) return N == 0 ? 1 : 0;
  return trivial_multiplicity(true, power(defining_character(g), 2 * N));
}

}  // namespace

long invariant_dim(Group G, int g, int N) {
  if (g < 0 || N < 0) throw std::invalid_argument("invariant_dim: negative argument");
  if (G == Group::Sp) return invariant_dim_sp(g, N);
  if (g == 0) return N == 0 ? 1 : 0;
  // O(2g): average over the two components.  On the non-identity component
  // the eigenvalues are +1, -1 and those of an element of Sp(2g-2).
  long so = trivial_multiplicity(false, power(defining_character(g), 2 * N));
  long twisted = invariant_dim_sp(g - 1, N);
  if ((so + twisted) % 2) throw std::logic_error("invariant_dim: odd component average");
  return (so + twisted) / 2;
}

long invariant_dim_explicit(Group G, int g, int N) {
  if (g == 0) return N == 0 ? 1 : 0;
  const int L = 2 * N, A = 2 * g;
  double total = std::pow(double(A), L);
  if (total > 5e6) throw ResourceLimit("invariant_dim_explicit: tensor power too large", size_t(total));
  // letter maps x -> (coeff, y) for each generator of the Lie algebra
  using Map = std::vector<std::vector<std::pair<int, int>>>;  // per letter: list of (y, coeff)
  std::vector<Map> gens;
  auto a = [](int i) { return 2 * i; };
  auto b = [](int i) { return 2 * i + 1; };
  const bool sp = G == Group::Sp;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      Map X(A);
      X[a(i)].push_back({a(j), 1});
      X[b(j)].push_back({b(i), -1});
      gens.push_back(X);
    }
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      if (i == j && !sp) continue;
      Map up(A), down(A);
      if (i == j) {
        up[b(i)].push_back({a(i), 1});
        down[a(i)].push_back({b(i), 1});
      } else {
        up[b(i)].push_back({a(j), 1});
        up[b(j)].push_back({a(i), sp ? 1 : -1});
        down[a(i)].push_back({b(j), 1});
        down[a(j)].push_back({b(i), sp ? 1 : -1});
      }
      gens.push_back(up);
      gens.push_back(down);
    }
  // weight-zero words
  std::vector<long> cols;
  std::vector<int> word(L, 0);
  long code_total = long(total);
  for (long code = 0; code < code_total; ++code) {
    long c = code;
    std::vector<int> wt(g, 0);
    for (int s = 0; s < L; ++s) {
      int x = int(c % A);
      c /= A;
      wt[x >> 1] += (x & 1) ? -1 : 1;
    }
    if (std::all_of(wt.begin(), wt.end(), [](int v) { return v == 0; })) cols.push_back(code);
  }
  std::unordered_map<long, int> rowid;
  SparseIntMatrix M(0, int(cols.size()));
  auto row_of = [&](long key) {
    auto it = rowid.find(key);
    if (it != rowid.end()) return it->second;
    int r = int(rowid.size());
    rowid.emplace(key, r);
    return r;
  };
  std::vector<long> pw(L + 1, 1);
  for (int s = 1; s <= L; ++s) pw[s] = pw[s - 1] * A;
  std::vector<std::tuple<int, int, int64_t>> entries;
  for (size_t j = 0; j < cols.size(); ++j) {
    long code = cols[j];
    for (size_t k = 0; k < gens.size(); ++k) {
      for (int s = 0; s < L; ++s) {
        int x = int(code / pw[s] % A);
        for (auto [y, cf] : gens[k][x]) {
          long out = code + (long(y) - x) * pw[s];
          entries.push_back({row_of(long(k) * code_total + out), int(j), cf});
        }
      }
    }
    if (!sp) {
      // reflection a_g <-> b_g, impose (sigma - 1) v = 0
      long out = code;
      for (int s = 0; s < L; ++s) {
        int x = int(code / pw[s] % A);
        if ((x >> 1) == g - 1) out += (long(x ^ 1) - x) * pw[s];
      }
      long key = long(gens.size()) * code_total;
      entries.push_back({row_of(key + out), int(j), 1});
      entries.push_back({row_of(key + code), int(j), -1});
    }
  }
  M.rows = int(rowid.size());
  for (auto& [r, c, v] : entries) M.col[c].push_back({r, v});
  M.normalize();
  RankOptions opt;
  opt.certify_nnz = 0;
  long rank = rank_exact(M, opt).rank;
  return long(cols.size()) - rank;
}

}  // namespace gcx
