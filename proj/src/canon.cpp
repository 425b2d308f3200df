#include "gcx/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcx {

namespace {

thread_local long g_leaves = 0;

constexpr int kOmegaCode = 30000;

// Node layout: normal vertices 0..n-1, then (formal model only) crossed nodes,
// then legs.  Legs never move.
struct Structure {
  const Graph* G = nullptr;
  int m = 0;
  int n = 0, nc = 0, nl = 0, N = 0;
  std::vector<int> solid, dashed;       // N x N multiplicities
  std::vector<int> node_of_token;       // formal
  std::vector<int> item_of_token;       // formal
  std::vector<int> cross_node_item;     // formal: crossed node k -> item index
  std::vector<int> movable;             // nodes that may be permuted
  bool zero = false;

  int& S(int i, int j) { return solid[i * N + j]; }
  int& D(int i, int j) { return dashed[i * N + j]; }
};

void build(Structure& st, const Graph& G, int m) {
  st.G = &G;
  st.m = m;
  st.n = G.n;
  if (G.formal) {
    st.nc = G.count(Kind::Cross);
    st.nl = G.num_legs();
  }
  st.N = st.n + st.nc + st.nl;
  st.solid.assign(st.N * st.N, 0);
  st.dashed.assign(st.N * st.N, 0);
  for (const auto& it : G.items) {
    if (it.kind == Kind::Edge) {
      st.S(it.a, it.b) += 1;
      if (it.a != it.b) st.S(it.b, it.a) += 1;
    }
  }
  for (int i = 0; i < st.n; ++i)
    for (int j = i; j < st.n; ++j)
      if (st.S(i, j) > 1) st.zero = true;  // parallel odd edges
  if (G.formal) {
    st.node_of_token.assign(G.mate.size(), -1);
    st.item_of_token.assign(G.mate.size(), -1);
    int c = 0;
    for (size_t i = 0; i < G.items.size(); ++i) {
      const auto& it = G.items[i];
      int node = -1;
      if (it.kind == Kind::Letter) node = it.a;
      else if (it.kind == Kind::Cross) {
        node = st.n + c++;
        st.cross_node_item.push_back(int(i));
      } else if (it.kind == Kind::Leg) node = st.n + st.nc + it.a;
      if (node >= 0) {
        st.node_of_token[it.lab] = node;
        st.item_of_token[it.lab] = int(i);
      }
    }
    for (size_t t = 0; t < G.mate.size(); ++t) {
      if (st.item_of_token[t] < 0) continue;
      int u = G.mate[t];
      if (u < 0 || st.item_of_token[u] < 0) throw std::logic_error("unpaired token in formal graph");
      if (int(t) < u) {
        int x = st.node_of_token[t], y = st.node_of_token[u];
        st.D(x, y) += 1;
        if (x != y) st.D(y, x) += 1;
      }
    }
  } else {
    // identical odd items
    std::vector<std::pair<int, int>> lets, crs;
    for (const auto& it : G.items) {
      if (it.kind == Kind::Letter && (m & 1)) lets.push_back({it.a, it.lab});
      if (it.kind == Kind::Cross && !(m & 1)) crs.push_back({it.lab, 0});
    }
    std::sort(lets.begin(), lets.end());
    std::sort(crs.begin(), crs.end());
    if (std::adjacent_find(lets.begin(), lets.end()) != lets.end()) st.zero = true;
    if (std::adjacent_find(crs.begin(), crs.end()) != crs.end()) st.zero = true;
  }
  for (int i = 0; i < st.n + st.nc; ++i) st.movable.push_back(i);
}

std::vector<int> rank_of(const std::vector<std::vector<int>>& keys) {
  std::vector<int> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> col(keys.size());
  int r = -1;
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || keys[idx[k]] != keys[idx[k - 1]]) ++r;
    col[idx[k]] = r;
  }
  return col;
}

int num_colors(const std::vector<int>& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

std::vector<int> initial_colors(Structure& st) {
  const Graph& G = *st.G;
  std::vector<std::vector<int>> inv(st.N);
  for (int v = 0; v < st.N; ++v) {
    int type = v < st.n ? 0 : (v < st.n + st.nc ? 1 : 2);
    int legidx = type == 2 ? v - st.n - st.nc : -1;
    int sdeg = 0, ddeg = 0;
    for (int u = 0; u < st.N; ++u) {
      if (u == v) continue;
      sdeg += st.S(v, u);
      ddeg += st.D(v, u);
    }
    inv[v] = {type, legidx, st.S(v, v), sdeg, st.D(v, v), ddeg, 0};
  }
  for (const auto& it : G.items) {
    if (it.kind == Kind::Omega) inv[it.a][6] += 1;
  }
  if (!G.formal) {
    std::vector<std::vector<int>> labs(st.n);
    for (const auto& it : G.items)
      if (it.kind == Kind::Letter) labs[it.a].push_back(it.lab);
    for (int v = 0; v < st.n; ++v) {
      std::sort(labs[v].begin(), labs[v].end());
      inv[v].push_back(int(labs[v].size()));
      inv[v].insert(inv[v].end(), labs[v].begin(), labs[v].end());
    }
  }
  return rank_of(inv);
}

void refine(Structure& st, std::vector<int>& col) {
  int k = num_colors(col);
  std::vector<std::vector<int>> sig(st.N);
  std::vector<std::array<int, 3>> nb;
  while (true) {
    for (int v = 0; v < st.N; ++v) {
      nb.clear();
      for (int u = 0; u < st.N; ++u) {
        if (u == v) continue;
        int s = st.S(v, u), d = st.D(v, u);
        if (s || d) nb.push_back({col[u], s, d});
      }
      std::sort(nb.begin(), nb.end());
      auto& q = sig[v];
      q.clear();
      q.push_back(col[v]);
      for (const auto& t : nb) q.insert(q.end(), t.begin(), t.end());
    }
    auto nc = rank_of(sig);
    int k2 = num_colors(nc);
    col.swap(nc);
    if (k2 == k) break;
    k = k2;
  }
}

struct Leaf {
  std::vector<int> code;
  int sign = 1;
};

// Evaluate one discrete labeling perm (node -> canonical index).
Leaf evaluate(const Structure& st, const std::vector<int>& perm) {
  const Graph& G = *st.G;
  const int m = st.m;
  const int k = int(G.items.size());
  Leaf leaf;
  std::vector<int> newpos(k, -1);
  if (!G.formal) {
    std::vector<std::array<int, 3>> key(k);
    for (int i = 0; i < k; ++i) {
      const auto& it = G.items[i];
      switch (it.kind) {
        case Kind::Edge: {
          int x = perm[it.a], y = perm[it.b];
          if (x > y) std::swap(x, y);
          key[i] = {0, x, y};
          break;
        }
        case Kind::Letter: key[i] = {1, perm[it.a], it.lab}; break;
        case Kind::Omega: key[i] = {1, perm[it.a], kOmegaCode}; break;
        case Kind::Cross: key[i] = {2, it.lab, 0}; break;
        case Kind::Leg: key[i] = {3, it.a, it.lab}; break;
      }
    }
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
    leaf.code.reserve(3 * k);
    for (int p = 0; p < k; ++p) {
      newpos[idx[p]] = p;
      leaf.code.insert(leaf.code.end(), key[idx[p]].begin(), key[idx[p]].end());
    }
  } else {
    int pos = 0;
    // edges
    std::vector<std::array<int, 3>> ekeys;
    for (int i = 0; i < k; ++i) {
      const auto& it = G.items[i];
      if (it.kind != Kind::Edge) continue;
      int x = perm[it.a], y = perm[it.b];
      if (x > y) std::swap(x, y);
      ekeys.push_back({x, y, i});
    }
    std::sort(ekeys.begin(), ekeys.end());
    for (const auto& e : ekeys) {
      newpos[e[2]] = pos++;
      leaf.code.push_back(e[0]);
      leaf.code.push_back(e[1]);
    }
    leaf.code.push_back(-1);
    // dashed pairs, oriented so that the first token sits at the smaller endpoint
    std::vector<std::array<int, 4>> pairs;
    for (size_t t = 0; t < G.mate.size(); ++t) {
      if (st.item_of_token[t] < 0) continue;
      int u = G.mate[t];
      if (int(t) > u) continue;
      int x = perm[st.node_of_token[t]], y = perm[st.node_of_token[u]];
      int a = int(t), b = u;
      if (x > y) {
        std::swap(x, y);
        std::swap(a, b);
      }
      pairs.push_back({x, y, a, b});
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& p : pairs) {
      leaf.code.push_back(p[0]);
      leaf.code.push_back(p[1]);
      if (p[0] < st.n) newpos[st.item_of_token[p[2]]] = pos++;
      if (p[1] < st.n) newpos[st.item_of_token[p[3]]] = pos++;
    }
    leaf.code.push_back(-1);
    std::vector<std::array<int, 2>> om;
    for (int i = 0; i < k; ++i)
      if (G.items[i].kind == Kind::Omega) om.push_back({perm[G.items[i].a], i});
    std::sort(om.begin(), om.end());
    for (const auto& o : om) {
      newpos[o[1]] = pos++;
      leaf.code.push_back(o[0]);
    }
    std::vector<int> crossed(st.nc, -1);
    for (int c = 0; c < st.nc; ++c) crossed[perm[st.n + c] - st.n] = st.cross_node_item[c];
    for (int c = 0; c < st.nc; ++c) newpos[crossed[c]] = pos++;
    std::vector<int> legs(st.nl, -1);
    for (int i = 0; i < k; ++i)
      if (G.items[i].kind == Kind::Leg) legs[G.items[i].a] = i;
    for (int l = 0; l < st.nl; ++l) newpos[legs[l]] = pos++;
  }
  // sign of the rearrangement
  int inv = 0;
  for (int i = 0; i < k; ++i) {
    if (!item_parity(G.items[i], m)) continue;
    for (int j = i + 1; j < k; ++j)
      if (item_parity(G.items[j], m) && newpos[i] > newpos[j]) ++inv;
  }
  if (G.formal && (m & 1)) {
    for (size_t t = 0; t < G.mate.size(); ++t) {
      int ti = st.item_of_token[t];
      if (ti < 0) continue;
      int u = G.mate[t];
      if (int(t) > u) continue;
      int ui = st.item_of_token[u];
      if ((ti < ui) != (newpos[ti] < newpos[ui])) ++inv;
    }
  }
  leaf.sign = (inv & 1) ? -1 : 1;
  return leaf;
}

struct Search {
  const Structure* st;
  bool have = false;
  Leaf best;
  bool best_zero = false;

  void offer(const Leaf& lf) {
    ++g_leaves;
    if (!have || lf.code < best.code) {
      best = lf;
      best_zero = false;
      have = true;
    } else if (lf.code == best.code && lf.sign != best.sign) {
      best_zero = true;
    }
  }
};

void search(Structure& st, Search& S, std::vector<int> col) {
  refine(st, col);
  int k = num_colors(col);
  if (k == st.N) {
    S.offer(evaluate(st, col));
    return;
  }
  std::vector<int> size(k, 0);
  for (int c : col) ++size[c];
  int target = -1;
  for (int c = 0; c < k; ++c)
    if (size[c] > 1) {
      target = c;
      break;
    }
  for (int v = 0; v < st.N; ++v) {
    if (col[v] != target) continue;
    std::vector<int> c2(st.N);
    for (int u = 0; u < st.N; ++u) c2[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
    // compress
    std::vector<int> vals(c2);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (auto& x : c2) x = int(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
    search(st, S, c2);
  }
}

std::string node_name(int x, int n, int nc) {
  if (x < n) return "v" + std::to_string(x);
  if (x < n + nc) return "x" + std::to_string(x - n);
  return "l" + std::to_string(x - n - nc);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s;
}

std::string encode_leaf(const Structure& st, const Leaf& lf) {
  const Graph& G = *st.G;
  std::vector<std::string> parts;
  if (!G.formal) {
    std::vector<std::string> cr, ed, de, lg;
    for (size_t p = 0; p + 2 < lf.code.size(); p += 3) {
      int t = lf.code[p], x = lf.code[p + 1], y = lf.code[p + 2];
      if (t == 0) ed.push_back(std::to_string(x) + "-" + std::to_string(y));
      else if (t == 1) de.push_back(std::to_string(x) + ":" + (y == kOmegaCode ? std::string("w") : letter_name(y)));
      else if (t == 2) cr.push_back(letter_name(x));
      else lg.push_back(letter_name(y));
    }
    std::string s = "v1;" + std::to_string(G.n) + ";" + join(cr) + ";" + join(ed) + ";" + join(de);
    if (!lg.empty()) s += ";L" + join(lg);
    return s;
  }
  std::vector<std::string> ed, pr, om;
  size_t p = 0;
  while (lf.code[p] != -1) {
    ed.push_back(std::to_string(lf.code[p]) + "-" + std::to_string(lf.code[p + 1]));
    p += 2;
  }
  ++p;
  while (lf.code[p] != -1) {
    pr.push_back(node_name(lf.code[p], st.n, st.nc) + "-" + node_name(lf.code[p + 1], st.n, st.nc));
    p += 2;
  }
  ++p;
  for (; p < lf.code.size(); ++p) om.push_back(std::to_string(lf.code[p]));
  return "s1;" + std::to_string(G.n) + ";" + std::to_string(st.nc) + ";" + std::to_string(st.nl) + ";" + join(ed) +
         ";" + join(pr) + ";" + join(om);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_nonempty(const std::string& s, char sep) {
  if (s.empty()) return {};
  return split(s, sep);
}

}  // namespace

long last_search_leaves() { return g_leaves; }

CanonicalClass canonical_form(const Graph& G, int m) {
  Structure st;
  build(st, G, m);
  g_leaves = 0;
  Search S;
  S.st = &st;
  search(st, S, initial_colors(st));
  CanonicalClass cc;
  cc.enc = encode_leaf(st, S.best);
  cc.sign = (st.zero || S.best_zero) ? 0 : S.best.sign;
  return cc;
}

CanonicalClass canonical_form_bruteforce(const Graph& G, int m) {
  Structure st;
  build(st, G, m);
  Search S;
  S.st = &st;
  // normal vertices and crossed nodes permute independently; legs fixed
  std::vector<int> pv(st.n), pc(st.nc);
  std::iota(pv.begin(), pv.end(), 0);
  do {
    std::iota(pc.begin(), pc.end(), 0);
    do {
      std::vector<int> perm(st.N);
      for (int i = 0; i < st.n; ++i) perm[i] = pv[i];
      for (int i = 0; i < st.nc; ++i) perm[st.n + i] = st.n + pc[i];
      for (int i = st.n + st.nc; i < st.N; ++i) perm[i] = i;
      S.offer(evaluate(st, perm));
    } while (std::next_permutation(pc.begin(), pc.end()));
  } while (std::next_permutation(pv.begin(), pv.end()));
  CanonicalClass cc;
  cc.enc = encode_leaf(st, S.best);
  cc.sign = (st.zero || S.best_zero) ? 0 : S.best.sign;
  return cc;
}

Graph decode(const std::string& enc) {
  auto f = split(enc, ';');
  Graph G;
  if (f.empty()) throw std::invalid_argument("empty encoding");
  if (f[0] == "v1") {
    if (f.size() < 5) throw std::invalid_argument("bad encoding: " + enc);
    G.n = std::stoi(f[1]);
    for (const auto& e : split_nonempty(f[3], ',')) {
      auto ab = split(e, '-');
      G.items.push_back(edge(std::stoi(ab[0]), std::stoi(ab[1])));
    }
    for (const auto& d : split_nonempty(f[4], ',')) {
      auto vx = split(d, ':');
      int v = std::stoi(vx[0]);
      if (vx[1] == "w") G.items.push_back(omega(v));
      else G.items.push_back(letter(v, parse_letter(vx[1])));
    }
    for (const auto& c : split_nonempty(f[2], ',')) G.items.push_back(cross(parse_letter(c)));
    if (f.size() > 5) {
      if (f[5].empty() || f[5][0] != 'L') throw std::invalid_argument("bad encoding: " + enc);
      int l = 0;
      for (const auto& x : split_nonempty(f[5].substr(1), ',')) G.items.push_back(leg(l++, parse_letter(x)));
    }
    return G;
  }
  if (f[0] == "s1") {
    if (f.size() != 7) throw std::invalid_argument("bad encoding: " + enc);
    G.formal = true;
    G.n = std::stoi(f[1]);
    int nc = std::stoi(f[2]);
    int nl = std::stoi(f[3]);
    for (const auto& e : split_nonempty(f[4], ',')) {
      auto ab = split(e, '-');
      G.items.push_back(edge(std::stoi(ab[0]), std::stoi(ab[1])));
    }
    std::vector<int> cross_tok(nc, -1), leg_tok(nl, -1);
    auto parse_node = [&](const std::string& s) { return std::make_pair(s[0], std::stoi(s.substr(1))); };
    std::vector<std::pair<std::pair<char, int>, std::pair<char, int>>> pairs;
    for (const auto& p : split_nonempty(f[5], ',')) {
      auto ab = split(p, '-');
      pairs.push_back({parse_node(ab[0]), parse_node(ab[1])});
    }
    // tokens: letters in emission order, then crossed, then legs
    std::vector<std::array<int, 2>> pair_tok(pairs.size(), {-1, -1});
    for (size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (a.first == 'v') {
        pair_tok[i][0] = G.new_token();
        G.items.push_back(letter(a.second, pair_tok[i][0]));
      }
      if (b.first == 'v') {
        pair_tok[i][1] = G.new_token();
        G.items.push_back(letter(b.second, pair_tok[i][1]));
      }
    }
    for (const auto& o : split_nonempty(f[6], ',')) G.items.push_back(omega(std::stoi(o)));
    for (int c = 0; c < nc; ++c) {
      cross_tok[c] = G.new_token();
      G.items.push_back(cross(cross_tok[c]));
    }
    for (int l = 0; l < nl; ++l) {
      leg_tok[l] = G.new_token();
      G.items.push_back(leg(l, leg_tok[l]));
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
      int t[2];
      for (int s = 0; s < 2; ++s) {
        auto nd = s == 0 ? pairs[i].first : pairs[i].second;
        if (nd.first == 'v') t[s] = pair_tok[i][s];
        else if (nd.first == 'x') t[s] = cross_tok[nd.second];
        else t[s] = leg_tok[nd.second];
      }
      G.pair_tokens(t[0], t[1]);
    }
    return G;
  }
  throw std::invalid_argument("unknown encoding version: " + f[0]);
}

}  // namespace gcx
