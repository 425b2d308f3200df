#include "gcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcx {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::GC1TP: return "gc1tp";
    case Variant::GC1: return "gc1";
    case Variant::GCEX: return "gcex";
  }
  return "?";
}

std::string to_string(Side s) { return s == Side::Connected ? "connected" : "ce"; }

std::string to_string(Family f) {
  switch (f) {
    case Family::JTP: return "jtp";
    case Family::J: return "j";
    case Family::K: return "k";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  std::string t;
  for (char c : s) t += char(std::tolower(static_cast<unsigned char>(c)));
  if (t == "gc1tp") return Variant::GC1TP;
  if (t == "gc1") return Variant::GC1;
  if (t == "gcex") return Variant::GCEX;
  throw std::invalid_argument("unknown variant: " + s);
}

Family parse_family(const std::string& s) {
  std::string t;
  for (char c : s) t += char(std::tolower(static_cast<unsigned char>(c)));
  if (t == "jtp") return Family::JTP;
  if (t == "j") return Family::J;
  if (t == "k") return Family::K;
  throw std::invalid_argument("unknown family: " + s);
}

int Graph::count(Kind k) const {
  int c = 0;
  for (const auto& it : items) c += it.kind == k;
  return c;
}

int Graph::new_token() {
  mate.push_back(-1);
  return int(mate.size()) - 1;
}

void Graph::pair_tokens(int t, int u) {
  mate[t] = int16_t(u);
  mate[u] = int16_t(t);
}

std::string letter_name(int lab) {
  return std::string(letter_is_a(lab) ? "a" : "b") + std::to_string(letter_var(lab) + 1);
}

int parse_letter(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b')) throw std::invalid_argument("bad letter: " + s);
  int i = std::stoi(s.substr(1));
  if (i < 1) throw std::invalid_argument("bad letter: " + s);
  return 2 * (i - 1) + (s[0] == 'b');
}

Grading grading_of(const Graph& G) {
  Grading gr;
  gr.v = G.n;
  for (const auto& it : G.items) {
    switch (it.kind) {
      case Kind::Edge: ++gr.e; break;
      case Kind::Letter: gr.D += 1; break;
      case Kind::Omega: gr.D += 2; break;
      case Kind::Cross: ++gr.crossed; break;
      case Kind::Leg: break;
    }
  }
  gr.W = 2 * (gr.e - gr.v) + gr.D + gr.crossed;
  gr.E = gr.e - gr.crossed;
  return gr;
}

std::vector<int> valences(const Graph& G) {
  std::vector<int> val(G.n, 0);
  for (const auto& it : G.items) {
    switch (it.kind) {
      case Kind::Edge: ++val[it.a]; ++val[it.b]; break;
      case Kind::Letter:
      case Kind::Omega: ++val[it.a]; break;
      default: break;
    }
  }
  return val;
}

namespace {

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

// Components of the underlying graph: solid edges join vertices; crossed items
// are their own components; in the formal model dashed pairs also join nodes.
int num_components(const Graph& G) {
  int ncross = G.count(Kind::Cross);
  int nleg = G.num_legs();
  int N = G.n + (G.formal ? ncross + nleg : ncross);
  std::vector<int> p(N);
  std::iota(p.begin(), p.end(), 0);
  auto unite = [&](int x, int y) { p[find(p, x)] = find(p, y); };
  for (const auto& it : G.items)
    if (it.kind == Kind::Edge) unite(it.a, it.b);
  if (G.formal) {
    std::vector<int> node(G.mate.size(), -1);
    int c = 0;
    for (const auto& it : G.items) {
      if (it.kind == Kind::Letter) node[it.lab] = it.a;
      else if (it.kind == Kind::Cross) node[it.lab] = G.n + c++;
      else if (it.kind == Kind::Leg) node[it.lab] = G.n + ncross + it.a;
    }
    for (size_t t = 0; t < node.size(); ++t)
      if (node[t] >= 0 && G.mate[t] >= 0 && node[G.mate[t]] >= 0) unite(node[t], node[G.mate[t]]);
  }
  int comps = 0;
  for (int i = 0; i < N; ++i) comps += find(p, i) == i;
  return comps;
}

bool is_admissible(const Graph& G, Variant v, Side s) {
  auto val = valences(G);
  for (int x : val)
    if (x < 3) return false;
  for (const auto& it : G.items) {
    if (it.kind == Kind::Edge && it.a == it.b && v != Variant::GC1TP) return false;
    if (it.kind == Kind::Omega && v != Variant::GCEX) return false;
    if (it.kind == Kind::Cross && v != Variant::GCEX) return false;
  }
  if (s == Side::Connected) {
    int ncross = G.count(Kind::Cross);
    if (ncross > 0) return ncross == 1 && G.n == 0 && G.items.size() == 1;
    if (G.n == 0) return false;
    return num_components(G) == 1;
  }
  return !G.items.empty() || G.n > 0;
}

bool is_admissible_stable(const Graph& G, Family f) {
  auto val = valences(G);
  for (int x : val)
    if (x < 3) return false;
  for (const auto& it : G.items) {
    if (it.kind == Kind::Edge && it.a == it.b && f != Family::JTP) return false;
    if ((it.kind == Kind::Omega || it.kind == Kind::Cross) && f != Family::K) return false;
  }
  return true;
}

namespace {

// Sign of word rearrangement: Koszul sign of the odd items plus (-1)^m for every
// dashed pair whose two slots change relative order.
int rearrangement_sign(const Graph& G, const std::vector<int>& newpos, int m) {
  const int k = int(G.items.size());
  int inv = 0;
  for (int i = 0; i < k; ++i) {
    if (!item_parity(G.items[i], m)) continue;
    for (int j = i + 1; j < k; ++j)
      if (item_parity(G.items[j], m) && newpos[i] > newpos[j]) ++inv;
  }
  if (G.formal && (m & 1)) {
    std::vector<int> slot(G.mate.size(), -1);
    for (int i = 0; i < k; ++i) {
      const auto& it = G.items[i];
      if (it.kind == Kind::Letter || it.kind == Kind::Cross || it.kind == Kind::Leg) slot[it.lab] = i;
    }
    for (size_t t = 0; t < slot.size(); ++t) {
      int u = G.mate[t];
      if (slot[t] < 0 || u < 0 || int(t) > u || slot[u] < 0) continue;
      bool before = slot[t] < slot[u];
      bool after = newpos[slot[t]] < newpos[slot[u]];
      if (before != after) ++inv;
    }
  }
  return (inv & 1) ? -1 : 1;
}

}  // namespace

int permutation_sign(const Graph& G, const std::vector<int>& order, int m) {
  std::vector<int> newpos(order.size());
  for (size_t k = 0; k < order.size(); ++k) newpos[order[k]] = int(k);
  return rearrangement_sign(G, newpos, m);
}

Graph permuted(const Graph& G, const std::vector<int>& order) {
  Graph H = G;
  for (size_t k = 0; k < order.size(); ++k) H.items[k] = G.items[order[k]];
  return H;
}

Graph apply_relabeling(const Graph& G, const Relabeling& r) {
  Graph H = G;
  for (size_t i = 0; i < G.items.size(); ++i) {
    Item it = G.items[i];
    if (it.kind == Kind::Edge) {
      it.a = int16_t(r.vertex[it.a]);
      it.b = int16_t(r.vertex[it.b]);
    } else if (it.kind == Kind::Letter || it.kind == Kind::Omega) {
      it.a = int16_t(r.vertex[it.a]);
    }
    H.items[r.target[i]] = it;
  }
  return H;
}

namespace {

struct ItemKey {
  int kind, x, y, lab;
  bool operator==(const ItemKey&) const = default;
  auto operator<=>(const ItemKey&) const = default;
};

ItemKey structural_key(const Graph& G, const Item& it) {
  int x = it.a, y = it.b;
  if (it.kind == Kind::Edge && x > y) std::swap(x, y);
  if (it.kind != Kind::Edge) y = 0;
  if (it.kind == Kind::Cross) x = 0;
  int lab = it.lab;
  if (G.formal && it.kind != Kind::Edge && it.kind != Kind::Omega) lab = 0;
  if (it.kind == Kind::Edge || it.kind == Kind::Omega) lab = 0;
  return {int(it.kind), x, y, lab};
}

}  // namespace

int relabeling_sign(const Graph& G, const Relabeling& r, int m) {
  const int k = int(G.items.size());
  // Bubble the relabeled word into target order one adjacent swap at a time.
  std::vector<int> pos(r.target.begin(), r.target.end());
  std::vector<int> at(k);
  for (int i = 0; i < k; ++i) at[i] = i;  // at[slot] = original item index currently in slot
  int sign = 1;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int s = 0; s + 1 < k; ++s) {
      int i = at[s], j = at[s + 1];
      if (pos[i] > pos[j]) {
        if (item_parity(G.items[i], m) && item_parity(G.items[j], m)) sign = -sign;
        if (G.formal && (m & 1)) {
          const auto& ii = G.items[i];
          const auto& jj = G.items[j];
          bool ti = ii.kind == Kind::Letter || ii.kind == Kind::Cross || ii.kind == Kind::Leg;
          bool tj = jj.kind == Kind::Letter || jj.kind == Kind::Cross || jj.kind == Kind::Leg;
          if (ti && tj && G.mate[ii.lab] == jj.lab) sign = -sign;
        }
        std::swap(at[s], at[s + 1]);
        swapped = true;
      }
    }
  }
  return sign;
}

int orientation_sign(const Graph& G, const Relabeling& r, int m) {
  const int k = int(G.items.size());
  if (int(r.target.size()) != k || int(r.vertex.size()) != G.n) throw std::invalid_argument("relabeling size mismatch");
  {
    std::vector<int> seen(k, 0);
    for (int t : r.target) {
      if (t < 0 || t >= k || seen[t]) throw std::invalid_argument("relabeling target not a permutation");
      seen[t] = 1;
    }
    std::vector<int> vs(G.n, 0);
    for (int v : r.vertex) {
      if (v < 0 || v >= G.n || vs[v]) throw std::invalid_argument("relabeling vertex map not a permutation");
      vs[v] = 1;
    }
  }
  Graph H = apply_relabeling(G, r);
  std::vector<ItemKey> a, b;
  for (const auto& it : G.items) a.push_back(structural_key(G, it));
  for (const auto& it : H.items) b.push_back(structural_key(H, it));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("relabeling is not an isomorphism");
  if (G.formal) {
    auto pairs = [](const Graph& X) {
      std::vector<std::pair<int, int>> node(X.mate.size(), {-1, -1});
      for (const auto& it : X.items) {
        if (it.kind == Kind::Letter) node[it.lab] = {0, it.a};
        else if (it.kind == Kind::Cross) node[it.lab] = {1, 0};
        else if (it.kind == Kind::Leg) node[it.lab] = {2, it.a};
      }
      std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
      for (size_t t = 0; t < X.mate.size(); ++t) {
        if (node[t].first < 0 || X.mate[t] < int(t)) continue;
        auto x = node[t], y = node[X.mate[t]];
        if (y < x) std::swap(x, y);
        out.push_back({x, y});
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (pairs(G) != pairs(H)) throw std::invalid_argument("relabeling is not an isomorphism");
  }
  return relabeling_sign(G, r, m);
}

std::string debug_string(const Graph& G) {
  std::ostringstream os;
  os << (G.formal ? "F" : "C") << " n=" << G.n << " [";
  for (size_t i = 0; i < G.items.size(); ++i) {
    const auto& it = G.items[i];
    if (i) os << ' ';
    switch (it.kind) {
      case Kind::Edge: os << "e" << it.a << "-" << it.b; break;
      case Kind::Letter:
        if (G.formal) os << "L" << it.a << ":t" << it.lab << "~" << G.mate[it.lab];
        else os << "L" << it.a << ":" << letter_name(it.lab);
        break;
      case Kind::Omega: os << "w" << it.a; break;
      case Kind::Cross:
        if (G.formal) os << "X:t" << it.lab << "~" << G.mate[it.lab];
        else os << "X:" << letter_name(it.lab);
        break;
      case Kind::Leg:
        if (G.formal) os << "l" << it.a << ":t" << it.lab << "~" << G.mate[it.lab];
        else os << "l" << it.a << ":" << letter_name(it.lab);
        break;
    }
  }
  os << "]";
  return os.str();
}

}  // namespace gcx
