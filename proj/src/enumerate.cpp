#include "gcx/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "gcx/canon.hpp"

namespace gcx {

Graph disjoint_union(const std::vector<Graph>& parts) {
  Graph U;
  if (!parts.empty()) U.formal = parts[0].formal;
  int legs = 0;
  for (const auto& P : parts) {
    const int off = U.n;
    const int toff = int(U.mate.size());
    for (int16_t t : P.mate) U.mate.push_back(t < 0 ? t : int16_t(t + toff));
    for (Item it : P.items) {
      switch (it.kind) {
        case Kind::Edge:
          it.a = int16_t(it.a + off);
          it.b = int16_t(it.b + off);
          break;
        case Kind::Letter:
        case Kind::Omega: it.a = int16_t(it.a + off); break;
        case Kind::Leg: it.a = int16_t(legs++); break;
        default: break;
      }
      if (U.formal && (it.kind == Kind::Letter || it.kind == Kind::Cross || it.kind == Kind::Leg))
        it.lab = int16_t(it.lab + toff);
      U.items.push_back(it);
    }
    U.n += P.n;
  }
  return U;
}

namespace {

using Found = std::vector<std::pair<int, std::string>>;

void collect(ChainBasis& B, Found& found, const Limits& lim) {
  std::map<int, std::set<std::string>> s;
  for (auto& [E, enc] : found) s[E].insert(std::move(enc));
  for (auto& [E, set] : s) {
    if (set.size() > lim.max_stratum)
      throw ResourceLimit("stratum E=" + std::to_string(E) + " exceeds cap", set.size());
    auto& v = B.strata[E];
    v.assign(set.begin(), set.end());
  }
}

// Letter words of length k over 2g letters: strictly increasing for odd
// letters, nondecreasing for even ones.
const std::vector<std::vector<int>>& letter_words(int g, int k, bool distinct) {
  static thread_local std::map<std::tuple<int, int, bool>, std::vector<std::vector<int>>> cache;
  auto key = std::make_tuple(g, k, distinct);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x < 2 * g; ++x) {
      cur.push_back(x);
      rec(distinct ? x + 1 : x);
      cur.pop_back();
    }
  };
  rec(0);
  return cache[key] = std::move(out);
}

bool connected_simple(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return false;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::function<int(int)> f = [&](int x) { return p[x] == x ? x : p[x] = f(p[x]); };
  for (auto [a, b] : edges) p[f(a)] = f(b);
  int c = 0;
  for (int i = 0; i < n; ++i) c += f(i) == i;
  return c == 1;
}

// A solid skeleton: simple edges plus at most one tadpole per vertex.
struct Skeleton {
  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg;
};

std::vector<Skeleton> skeletons(int n, int maxe, bool tadpoles, bool need_connected) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<Skeleton> out;
  const int P = int(pairs.size());
  for (long mask = 0; mask < (1L << P); ++mask) {
    if (__builtin_popcountl(mask) > maxe) continue;
    std::vector<std::pair<int, int>> es;
    for (int k = 0; k < P; ++k)
      if (mask >> k & 1) es.push_back(pairs[k]);
    if (need_connected && !connected_simple(n, es)) continue;
    for (long tmask = 0; tmask < (tadpoles ? (1L << n) : 1L); ++tmask) {
      Skeleton S{n, es, std::vector<int>(n, 0)};
      for (int v = 0; v < n; ++v)
        if (tmask >> v & 1) S.edges.push_back({v, v});
      if (int(S.edges.size()) > maxe) continue;
      for (auto [a, b] : S.edges) {
        S.deg[a]++;
        S.deg[b]++;
      }
      out.push_back(std::move(S));
    }
  }
  return out;
}

// Connected concrete generators of weight w.
void connected_concrete(const ComplexSpec& spec, int w, Found& found) {
  const bool ex = spec.variant == Variant::GCEX;
  const bool tp = spec.variant == Variant::GC1TP;
  const bool distinct = spec.m & 1;
  const int g = spec.g;
  if (ex && w == 1) {
    for (int x = 0; x < 2 * g; ++x) {
      Graph G;
      G.items = {cross(x)};
      auto c = canonical_form(G, spec.m);
      found.push_back({-1, c.enc});
    }
  }
  struct Job {
    const Skeleton* S;
    std::vector<int> k, o;
  };
  std::vector<std::vector<Skeleton>> skels;
  std::vector<Job> jobs;
  for (int n = 1; n <= w; ++n) skels.push_back(skeletons(n, (3 * w) / 2, tp, true));
  for (const auto& level : skels) {
    for (const auto& S : level) {
      const int n = S.n, e = int(S.edges.size());
      const int D = w - 2 * (e - n);
      if (D < 0) continue;
      std::vector<int> k(n), o(n);
      std::function<void(int, int)> rec = [&](int v, int rem) {
        if (v == n) {
          if (rem == 0) jobs.push_back({&S, k, o});
          return;
        }
        for (int ov = 0; ex ? 2 * ov <= rem : ov == 0; ++ov) {
          for (int kv = 0; kv + 2 * ov <= rem; ++kv) {
            if (S.deg[v] + kv + ov < 3) continue;
            if (distinct && kv > 2 * g) break;
            if (kv > 0 && g == 0) break;
            k[v] = kv;
            o[v] = ov;
            rec(v + 1, rem - kv - 2 * ov);
          }
        }
      };
      rec(0, D);
    }
  }
  std::vector<Found> local(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t j = 0; j < jobs.size(); ++j) {
    const auto& job = jobs[j];
    const Skeleton& S = *job.S;
    Graph base;
    base.n = S.n;
    for (auto [a, b] : S.edges) base.items.push_back(edge(a, b));
    for (int v = 0; v < S.n; ++v)
      for (int t = 0; t < job.o[v]; ++t) base.items.push_back(omega(v));
    const int E = int(S.edges.size());
    std::function<void(int, Graph&)> rec = [&](int v, Graph& G) {
      if (v == S.n) {
        auto c = canonical_form(G, spec.m);
        if (c.sign != 0) local[j].push_back({E, c.enc});
        return;
      }
      for (const auto& word : letter_words(g, job.k[v], distinct)) {
        size_t before = G.items.size();
        for (int x : word) G.items.push_back(letter(v, x));
        rec(v + 1, G);
        G.items.resize(before);
      }
    };
    Graph G = base;
    rec(0, G);
  }
  for (auto& l : local)
    for (auto& x : l) found.push_back(std::move(x));
}

ChainBasis connected_basis(const ComplexSpec& spec, const Limits& lim) {
  ChainBasis B;
  Found found;
  connected_concrete(spec, spec.W, found);
  collect(B, found, lim);
  return B;
}

}  // namespace

ChainBasis enumerate_basis(const ComplexSpec& spec, const Limits& lim) {
  if (spec.W < 1 || spec.g < 0) throw std::invalid_argument("enumerate_basis: need W >= 1, g >= 0");
  if (spec.W > lim.max_vertices) throw ResourceLimit("weight exceeds vertex cap", 0);
  if (spec.side == Side::Connected) return connected_basis(spec, lim);

  // CE side: multisets of connected generators.
  struct Gen {
    Graph G;
    int w, E;
  };
  std::vector<Gen> gens;
  for (int w = 1; w <= spec.W; ++w) {
    ComplexSpec c = spec;
    c.side = Side::Connected;
    c.W = w;
    auto B = connected_basis(c, lim);
    for (const auto& [E, encs] : B.strata)
      for (const auto& enc : encs) gens.push_back({decode(enc), w, E});
  }
  Found found;
  std::vector<int> pick;
  std::vector<std::vector<int>> multisets;
  std::function<void(int, int)> rec = [&](int start, int rem) {
    if (rem == 0) {
      multisets.push_back(pick);
      return;
    }
    for (int i = start; i < int(gens.size()); ++i) {
      if (gens[i].w > rem) continue;
      pick.push_back(i);
      rec(i, rem - gens[i].w);
      pick.pop_back();
    }
  };
  rec(0, spec.W);
  std::vector<std::pair<int, std::string>> out(multisets.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (size_t k = 0; k < multisets.size(); ++k) {
    std::vector<Graph> parts;
    int E = 0;
    for (int i : multisets[k]) {
      parts.push_back(gens[i].G);
      E += gens[i].E;
    }
    auto c = canonical_form(disjoint_union(parts), spec.m);
    if (c.sign != 0) out[k] = {E, c.enc};
    else out[k] = {E, std::string()};
  }
  for (auto& x : out)
    if (!x.second.empty()) found.push_back(std::move(x));
  ChainBasis B;
  collect(B, found, lim);
  return B;
}

ChainBasis enumerate_basis_naive(const ComplexSpec& spec) {
  const bool ex = spec.variant == Variant::GCEX;
  const int W = spec.W, g = spec.g;
  Found found;
  auto consider = [&](const Graph& G) {
    if (!is_admissible(G, spec.variant, spec.side)) return;
    auto gr = grading_of(G);
    if (gr.W != W) return;
    auto c = canonical_form(G, spec.m);
    if (c.sign != 0) found.push_back({gr.E, c.enc});
  };
  // crossed items only
  if (ex) {
    std::vector<int> labs;
    std::function<void(int, int)> crosses = [&](int start, int left) {
      if (left == 0) {
        Graph G;
        for (int x : labs) G.items.push_back(cross(x));
        consider(G);
        return;
      }
      for (int x = start; x < 2 * g; ++x) {
        labs.push_back(x);
        crosses(x, left - 1);
        labs.pop_back();
      }
    };
    for (int c = 1; c <= W; ++c) crosses(0, c);
  }
  for (int n = 1; n <= W; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) slots.push_back({i, j});
    // decoration kinds: (vertex, letter) and (vertex, omega)
    std::vector<Item> dk;
    for (int v = 0; v < n; ++v) {
      for (int x = 0; x < 2 * g; ++x) dk.push_back(letter(v, x));
      if (ex) dk.push_back(omega(v));
    }
    for (int e = 0; 2 * (e - n) <= W; ++e) {
      std::vector<int> es;
      std::function<void(int)> edges_rec = [&](int start) {
        if (int(es.size()) == e) {
          const int D = W - 2 * (e - n);
          for (int c = 0; ex && spec.side == Side::CE ? c <= D : c == 0; ++c) {
            std::vector<int> ds;
            std::vector<int> cl;
            std::function<void(int, int)> deco = [&](int start2, int left) {
              if (left == 0) {
                std::function<void(int, int)> cr = [&](int s3, int cleft) {
                  if (cleft == 0) {
                    Graph G;
                    G.n = n;
                    for (int k : es) G.items.push_back(edge(slots[k].first, slots[k].second));
                    for (int k : ds) G.items.push_back(dk[k]);
                    for (int x : cl) G.items.push_back(cross(x));
                    consider(G);
                    return;
                  }
                  for (int x = s3; x < 2 * g; ++x) {
                    cl.push_back(x);
                    cr(x, cleft - 1);
                    cl.pop_back();
                  }
                };
                cr(0, c);
                return;
              }
              for (int k = start2; k < int(dk.size()); ++k) {
                int wt = dk[k].kind == Kind::Omega ? 2 : 1;
                if (wt > left) continue;
                ds.push_back(k);
                deco(k, left - wt);
                ds.pop_back();
              }
            };
            deco(0, D - c);
          }
          return;
        }
        for (int k = start; k < int(slots.size()); ++k) {
          es.push_back(k);
          edges_rec(k);
          es.pop_back();
        }
      };
      edges_rec(0);
    }
  }
  ChainBasis B;
  collect(B, found, Limits{});
  return B;
}

ChainBasis enumerate_stable_basis(const StableSpec& spec, const Limits& lim) {
  if (spec.W < 0 || spec.M < 0) throw std::invalid_argument("enumerate_stable_basis: bad spec");
  if (spec.W > lim.max_vertices) throw ResourceLimit("weight exceeds vertex cap", 0);
  const bool K = spec.family == Family::K;
  const bool tp = spec.family == Family::JTP;
  const int W = spec.W, M = spec.M;
  Found found;
  struct Job {
    const Skeleton* S;
    std::vector<int> h, o;
    int c;
  };
  std::vector<std::vector<Skeleton>> skels;
  for (int n = 0; n <= W; ++n) skels.push_back(n == 0 ? std::vector<Skeleton>{Skeleton{0, {}, {}}}
                                                       : skeletons(n, (3 * W) / 2, tp, false));
  std::vector<Job> jobs;
  for (const auto& level : skels) {
    for (const auto& S : level) {
      const int n = S.n, e = int(S.edges.size());
      const int rest = W - 2 * (e - n);
      if (rest < 0) continue;
      for (int c = 0; K ? c <= rest : c == 0; ++c) {
        std::vector<int> h(n), o(n);
        std::function<void(int, int)> rec = [&](int v, int rem) {
          if (v == n) {
            if (rem == 0) jobs.push_back({&S, h, o, c});
            return;
          }
          for (int ov = 0; K ? 2 * ov <= rem : ov == 0; ++ov) {
            for (int hv = 0; hv + 2 * ov <= rem; ++hv) {
              if (S.deg[v] + hv + ov < 3) continue;
              h[v] = hv;
              o[v] = ov;
              rec(v + 1, rem - hv - 2 * ov);
            }
          }
        };
        rec(0, rest - c);
      }
    }
  }
  std::vector<Found> local(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t j = 0; j < jobs.size(); ++j) {
    const auto& job = jobs[j];
    const Skeleton& S = *job.S;
    const int n = S.n;
    // nodes: vertices, crossed, legs
    const int N = n + job.c + M;
    std::vector<int> rem(N);
    for (int v = 0; v < n; ++v) rem[v] = job.h[v];
    for (int i = n; i < N; ++i) rem[i] = 1;
    int ends = 0;
    for (int x : rem) ends += x;
    if (ends % 2) continue;
    std::vector<std::vector<int>> A(N, std::vector<int>(N, 0));
    auto is_cross = [&](int i) { return i >= n && i < n + job.c; };
    std::function<void(int, int)> rec = [&](int i, int k) {
      if (i == N) {
        Graph G;
        G.formal = true;
        G.n = n;
        for (auto [a, b] : S.edges) G.items.push_back(edge(a, b));
        std::vector<Item> letters, crosses, legs(M);
        int cidx = 0;
        std::vector<int> cross_tok(job.c, -1);
        auto end_item = [&](int node, int tok) {
          if (node < n) letters.push_back(letter(node, tok));
          else if (node < n + job.c) cross_tok[node - n] = tok;
          else legs[node - n - job.c] = leg(node - n - job.c, tok);
        };
        for (int a = 0; a < N; ++a)
          for (int b = a; b < N; ++b)
            for (int t = 0; t < A[a][b]; ++t) {
              int x = G.new_token(), y = G.new_token();
              G.pair_tokens(x, y);
              end_item(a, x);
              end_item(b, y);
            }
        (void)cidx;
        for (auto& it : letters) G.items.push_back(it);
        for (int v = 0; v < n; ++v)
          for (int t = 0; t < job.o[v]; ++t) G.items.push_back(omega(v));
        for (int t : cross_tok) G.items.push_back(cross(t));
        for (auto& it : legs) G.items.push_back(it);
        auto c = canonical_form(G, spec.m);
        if (c.sign != 0) local[j].push_back({int(S.edges.size()) - job.c, c.enc});
        return;
      }
      if (k == N) {
        if (rem[i] == 0) rec(i + 1, i + 1);
        return;
      }
      if (k == i) {
        if (i >= n) {
          rec(i, i + 1);
          return;
        }
        for (int t = 0; 2 * t <= rem[i]; ++t) {
          A[i][i] = t;
          rem[i] -= 2 * t;
          rec(i, i + 1);
          rem[i] += 2 * t;
        }
        A[i][i] = 0;
        return;
      }
      int top = std::min(rem[i], rem[k]);
      if (is_cross(i) && is_cross(k)) top = 0;
      for (int t = 0; t <= top; ++t) {
        A[i][k] = t;
        rem[i] -= t;
        rem[k] -= t;
        rec(i, k + 1);
        rem[i] += t;
        rem[k] += t;
      }
      A[i][k] = 0;
    };
    rec(0, 0);
  }
  for (auto& l : local)
    for (auto& x : l) found.push_back(std::move(x));
  ChainBasis B;
  collect(B, found, lim);
  return B;
}

}  // namespace gcx
