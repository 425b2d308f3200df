#include "gcx/differential.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcx {

Rules rules_for(Variant v, Side s, int m, int g) {
  Rules R;
  R.m = m;
  R.g = g;
  R.tadpoles = v == Variant::GC1TP;
  R.ex = v == Variant::GCEX;
  R.cross = R.ex && s == Side::CE;
  R.island = R.ex;
  R.connected = s == Side::Connected;
  return R;
}

Rules rules_for(Family f, int m, int g) {
  Rules R;
  R.m = m;
  R.g = g;
  R.tadpoles = f == Family::JTP;
  R.ex = f == Family::K;
  R.cross = R.ex;
  R.island = R.ex;
  R.connected = false;
  R.stable = true;
  return R;
}

namespace {

inline int msign(int m) { return (m & 1) ? -1 : 1; }

// Move the items at `pos` (in that order) to the front of the word.
std::pair<int, Graph> to_front(const Graph& G, const std::vector<int>& pos, int m) {
  std::vector<int> order(pos);
  std::vector<char> used(G.items.size(), 0);
  for (int p : pos) used[p] = 1;
  for (size_t i = 0; i < G.items.size(); ++i)
    if (!used[i]) order.push_back(int(i));
  return {permutation_sign(G, order, m), permuted(G, order)};
}

void erase_front(Graph& G, int k) { G.items.erase(G.items.begin(), G.items.begin() + k); }

// Relabel vertex j as i, then fill the hole left by j with the last vertex.
void merge_vertex(Graph& G, int i, int j) {
  int last = G.n - 1;
  for (auto& it : G.items) {
    if (it.kind == Kind::Edge) {
      if (it.a == j) it.a = int16_t(i);
      if (it.b == j) it.b = int16_t(i);
    } else if (it.kind == Kind::Letter || it.kind == Kind::Omega) {
      if (it.a == j) it.a = int16_t(i);
    }
  }
  if (j != last) {
    for (auto& it : G.items) {
      if (it.kind == Kind::Edge) {
        if (it.a == last) it.a = int16_t(j);
        if (it.b == last) it.b = int16_t(j);
      } else if (it.kind == Kind::Letter || it.kind == Kind::Omega) {
        if (it.a == last) it.a = int16_t(j);
      }
    }
  }
  G.n -= 1;
}

void remove_vertex(Graph& G, int v) {
  int last = G.n - 1;
  if (v != last) {
    for (auto& it : G.items) {
      if (it.kind == Kind::Edge) {
        if (it.a == last) it.a = int16_t(v);
        if (it.b == last) it.b = int16_t(v);
      } else if (it.kind == Kind::Letter || it.kind == Kind::Omega) {
        if (it.a == last) it.a = int16_t(v);
      }
    }
  }
  G.n -= 1;
}

int token_slot(const Graph& G, int tok) {
  for (size_t i = 0; i < G.items.size(); ++i) {
    const auto& it = G.items[i];
    if ((it.kind == Kind::Letter || it.kind == Kind::Cross || it.kind == Kind::Leg) && it.lab == tok) return int(i);
  }
  return -1;
}

// Evaluate <x,y> on the adjacent letter slots p, p+1 and delete them.
// Returns 0 coefficient when the pairing vanishes.
int64_t contract_adjacent(Graph& G, int p, const Rules& R) {
  const Item x = G.items[p], y = G.items[p + 1];
  if (!G.formal) {
    int c = pairing(x.lab, y.lab, R.m);
    G.items.erase(G.items.begin() + p, G.items.begin() + p + 2);
    return c;
  }
  const int s = msign(R.m);
  int64_t c;
  if (G.mate[x.lab] == y.lab) {
    c = int64_t(s) * 2 * R.g;
  } else {
    int u = G.mate[x.lab], w = G.mate[y.lab];
    int pu = token_slot(G, u), pw = token_slot(G, w);
    c = s;
    if (pu < p) c *= s;
    if (pw < p + 1) c *= s;
    if (pw < pu) c *= s;
    G.pair_tokens(u, w);
  }
  G.mate[x.lab] = -1;
  G.mate[y.lab] = -1;
  G.items.erase(G.items.begin() + p, G.items.begin() + p + 2);
  return c;
}

// Prepend Delta_1 with first factor at vertex i and second at vertex j.
void insert_delta1(std::vector<Term>& out, const Graph& H, int i, int j, int64_t coeff, const Rules& R) {
  if (H.formal) {
    Graph K = H;
    int t = K.new_token(), u = K.new_token();
    K.pair_tokens(t, u);
    K.items.insert(K.items.begin(), {letter(i, t), letter(j, u)});
    out.push_back({coeff, std::move(K)});
    return;
  }
  for (int x = 0; x < 2 * R.g; ++x) {
    int y = x ^ 1;
    int c = diag_coeff(x, y, R.m);
    Graph K = H;
    K.items.insert(K.items.begin(), {letter(i, x), letter(j, y)});
    out.push_back({coeff * c, std::move(K)});
  }
}

struct VertexInfo {
  int edge_ends = 0;
  bool tadpole = false;
  int omegas = 0;
  std::vector<int> letters;  // positions
};

std::vector<VertexInfo> vertex_info(const Graph& G) {
  std::vector<VertexInfo> vi(G.n);
  for (size_t p = 0; p < G.items.size(); ++p) {
    const auto& it = G.items[p];
    if (it.kind == Kind::Edge) {
      vi[it.a].edge_ends++;
      vi[it.b].edge_ends++;
      if (it.a == it.b) vi[it.a].tadpole = true;
    } else if (it.kind == Kind::Letter) {
      vi[it.a].letters.push_back(int(p));
    } else if (it.kind == Kind::Omega) {
      vi[it.a].omegas++;
    }
  }
  return vi;
}

}  // namespace

std::vector<Term> d_contract(const Graph& G, const Rules& R) {
  std::vector<Term> out;
  for (size_t p = 0; p < G.items.size(); ++p) {
    const auto& it = G.items[p];
    if (it.kind != Kind::Edge || it.a == it.b) continue;
    auto [s, H] = to_front(G, {int(p)}, R.m);
    erase_front(H, 1);
    merge_vertex(H, std::min(it.a, it.b), std::max(it.a, it.b));
    out.push_back({-int64_t(s), std::move(H)});
  }
  return out;
}

std::vector<Term> d_cut(const Graph& G, const Rules& R) {
  std::vector<Term> out;
  for (size_t p = 0; p < G.items.size(); ++p) {
    const auto& it = G.items[p];
    if (it.kind != Kind::Edge) continue;
    auto [s, H] = to_front(G, {int(p)}, R.m);
    erase_front(H, 1);
    insert_delta1(out, H, it.a, it.b, s, R);
    if (R.ex) {
      Graph K1 = H;
      K1.items.insert(K1.items.begin(), omega(it.b));
      out.push_back({s, std::move(K1)});
      Graph K2 = H;
      K2.items.insert(K2.items.begin(), omega(it.a));
      out.push_back({s, std::move(K2)});
    }
  }
  return out;
}

std::vector<Term> d_mul2(const Graph& G, const Rules& R) {
  std::vector<Term> out;
  if (!R.ex) return out;
  auto vi = vertex_info(G);
  for (size_t p = 0; p < G.items.size(); ++p) {
    const auto& it = G.items[p];
    if (it.kind != Kind::Edge || it.a == it.b) continue;
    for (int v : {int(it.a), int(it.b)}) {
      const auto& info = vi[v];
      if (info.edge_ends != 1 || info.omegas != 0 || info.letters.size() != 2) continue;
      int u = v == it.a ? it.b : it.a;
      auto [s, H] = to_front(G, {int(p), info.letters[0], info.letters[1]}, R.m);
      erase_front(H, 1);
      int64_t c = contract_adjacent(H, 0, R);
      if (c == 0) continue;
      H.items.insert(H.items.begin(), omega(v));
      merge_vertex(H, std::min(u, v), std::max(u, v));
      out.push_back({s * c, std::move(H)});
    }
  }
  return out;
}

std::vector<Term> d_cross(const Graph& G, const Rules& R) {
  std::vector<Term> out;
  if (!R.cross && !R.island) return out;
  auto vi = vertex_info(G);
  auto val = valences(G);
  if (R.cross) {
    for (size_t q = 0; q < G.items.size(); ++q) {
      const auto& it = G.items[q];
      if (it.kind == Kind::Letter) {
        if (val[it.a] - 1 < 3) continue;
        auto [s, H] = to_front(G, {int(q)}, R.m);
        H.items[0] = cross(it.lab);
        out.push_back({int64_t(s) * R.sa, std::move(H)});
      } else if (it.kind == Kind::Omega) {
        auto [s, H] = to_front(G, {int(q)}, R.m);
        erase_front(H, 1);
        if (H.formal) {
          int t = H.new_token(), u = H.new_token();
          H.pair_tokens(t, u);
          H.items.insert(H.items.begin(), {cross(t), letter(it.a, u)});
          out.push_back({int64_t(s) * R.sb, std::move(H)});
        } else {
          for (int x = 0; x < 2 * R.g; ++x) {
            int y = x ^ 1;
            Graph K = H;
            K.items.insert(K.items.begin(), {cross(x), letter(it.a, y)});
            out.push_back({int64_t(s) * R.sb * diag_coeff(x, y, R.m), std::move(K)});
          }
        }
      }
    }
  }
  if (R.island) {
    for (int v = 0; v < G.n; ++v) {
      const auto& info = vi[v];
      if (info.edge_ends != 0 || info.omegas != 0 || info.letters.size() != 3) continue;
      auto [s, H] = to_front(G, info.letters, R.m);
      // <a,b> cr(c)
      {
        Graph K = H;
        int64_t c = contract_adjacent(K, 0, R);
        if (c) {
          K.items[0].kind = Kind::Cross;
          remove_vertex(K, v);
          out.push_back({int64_t(s) * R.sc * c, std::move(K)});
        }
      }
      // <b,c> cr(a)
      {
        Graph K = H;
        int64_t c = contract_adjacent(K, 1, R);
        if (c) {
          K.items[0].kind = Kind::Cross;
          remove_vertex(K, v);
          out.push_back({int64_t(s) * R.sc * c, std::move(K)});
        }
      }
      // <c,a> cr(b)
      {
        std::vector<int> order(H.items.size());
        std::iota(order.begin(), order.end(), 0);
        order[0] = 2;
        order[1] = 0;
        order[2] = 1;
        int s2 = permutation_sign(H, order, R.m);
        Graph K = permuted(H, order);
        int64_t c = contract_adjacent(K, 0, R);
        if (c) {
          K.items[0].kind = Kind::Cross;
          remove_vertex(K, v);
          out.push_back({int64_t(s) * s2 * R.sc * c, std::move(K)});
        }
      }
    }
  }
  return out;
}

bool admissible(const Graph& G, const Rules& R) {
  auto val = valences(G);
  for (int x : val)
    if (x < 3) return false;
  for (const auto& it : G.items) {
    if (it.kind == Kind::Edge && it.a == it.b && !R.tadpoles) return false;
    if ((it.kind == Kind::Omega || it.kind == Kind::Cross) && !R.ex) return false;
  }
  if (R.connected) {
    int ncross = G.count(Kind::Cross);
    if (ncross > 0) return ncross == 1 && G.n == 0 && G.items.size() == 1;
    return G.n > 0 && num_components(G) == 1;
  }
  return true;
}

void add_terms(FormalSum& out, const std::vector<Term>& terms, const Rules& R, int64_t scale) {
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!admissible(t.graph, R)) continue;
    auto cc = canonical_form(t.graph, R.m);
    if (cc.sign == 0) continue;
    auto& slot = out[cc.enc];
    slot += scale * t.coeff * cc.sign;
    if (slot == 0) out.erase(cc.enc);
  }
}

FormalSum differential(const Graph& G, const Rules& R) {
  FormalSum out;
  add_terms(out, d_contract(G, R), R);
  add_terms(out, d_cut(G, R), R);
  add_terms(out, d_mul2(G, R), R);
  add_terms(out, d_cross(G, R), R);
  return out;
}

FormalSum expand_formal(const Graph& G, int m, int g) {
  if (!G.formal) throw std::invalid_argument("expand_formal needs a formal graph");
  // pairs oriented by slot order
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> slot(G.mate.size(), -1);
  for (size_t i = 0; i < G.items.size(); ++i) {
    const auto& it = G.items[i];
    if (it.kind == Kind::Letter || it.kind == Kind::Cross || it.kind == Kind::Leg) slot[it.lab] = int(i);
  }
  for (size_t t = 0; t < G.mate.size(); ++t) {
    if (slot[t] < 0) continue;
    int u = G.mate[t];
    if (slot[t] < slot[u]) pairs.push_back({int(t), u});
  }
  FormalSum out;
  const int np = int(pairs.size());
  std::vector<int> choice(np, 0);
  std::vector<int> lab(G.mate.size(), 0);
  while (true) {
    int64_t c = 1;
    for (int k = 0; k < np; ++k) {
      int x = choice[k], y = x ^ 1;
      lab[pairs[k].first] = x;
      lab[pairs[k].second] = y;
      c *= diag_coeff(x, y, m);
    }
    Graph H;
    H.n = G.n;
    for (const auto& it : G.items) {
      Item jt = it;
      if (it.kind == Kind::Letter || it.kind == Kind::Cross || it.kind == Kind::Leg) jt.lab = int16_t(lab[it.lab]);
      H.items.push_back(jt);
    }
    auto cc = canonical_form(H, m);
    if (cc.sign != 0) {
      auto& s = out[cc.enc];
      s += c * cc.sign;
      if (s == 0) out.erase(cc.enc);
    }
    int k = 0;
    while (k < np && ++choice[k] == 2 * g) choice[k++] = 0;
    if (k == np) break;
  }
  return out;
}

}  // namespace gcx
