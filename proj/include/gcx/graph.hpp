#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gcx {

enum class Variant { GC1TP, GC1, GCEX };
enum class Side { Connected, CE };
// Stable two-colored families: J with and without solid tadpoles, and K.
enum class Family { JTP, J, K };

std::string to_string(Variant v);
std::string to_string(Side s);
std::string to_string(Family f);
Variant parse_variant(const std::string& s);
Family parse_family(const std::string& s);

enum class Kind : uint8_t { Edge = 0, Letter = 1, Omega = 2, Cross = 3, Leg = 4 };

// One factor of the orientation word.
//   Edge:   a-b (unordered, tadpole if a == b), odd
//   Letter: decoration at vertex a; lab is a letter code (concrete) or a token (formal), parity m
//   Omega:  top class at vertex a, even
//   Cross:  crossed vertex carrying lab, parity m+1
//   Leg:    external leg a carrying lab, parity m
// Letter codes: a_i -> 2(i-1), b_i -> 2(i-1)+1.
struct Item {
  Kind kind = Kind::Edge;
  int16_t a = 0;
  int16_t b = 0;
  int16_t lab = 0;

  bool operator==(const Item&) const = default;
};

inline Item edge(int i, int j) { return {Kind::Edge, int16_t(i), int16_t(j), 0}; }
inline Item letter(int v, int lab) { return {Kind::Letter, int16_t(v), 0, int16_t(lab)}; }
inline Item omega(int v) { return {Kind::Omega, int16_t(v), 0, 0}; }
inline Item cross(int lab) { return {Kind::Cross, 0, 0, int16_t(lab)}; }
inline Item leg(int l, int lab) { return {Kind::Leg, int16_t(l), 0, int16_t(lab)}; }

inline int item_parity(const Item& it, int m) {
  switch (it.kind) {
    case Kind::Edge: return 1;
    case Kind::Letter: return m & 1;
    case Kind::Omega: return 0;
    case Kind::Cross: return (m + 1) & 1;
    case Kind::Leg: return m & 1;
  }
  return 0;
}

// A decorated graph as an ordered word of items.  In the formal (stable) model
// the lab of Letter/Cross/Leg items is a token and mate[token] is its dashed
// partner; a dashed edge stands for one copy of the diagonal Delta_1.
struct Graph {
  int n = 0;
  bool formal = false;
  std::vector<Item> items;
  std::vector<int16_t> mate;

  int count(Kind k) const;
  int num_legs() const { return count(Kind::Leg); }
  int new_token();
  void pair_tokens(int t, int u);
};

inline int letter_var(int lab) { return lab >> 1; }
inline bool letter_is_a(int lab) { return (lab & 1) == 0; }
std::string letter_name(int lab);
int parse_letter(const std::string& s);

// <x,y>: <a_i,b_i> = 1, <b_i,a_i> = (-1)^m.
inline int pairing(int x, int y, int m) {
  if ((x >> 1) != (y >> 1) || x == y) return 0;
  if (letter_is_a(x)) return 1;
  return (m & 1) ? -1 : 1;
}

// Delta_1 = sum_{x,y} G_xy x (x) y with G_{a_i b_i} = (-1)^m, G_{b_i a_i} = 1.
inline int diag_coeff(int x, int y, int m) {
  if ((x >> 1) != (y >> 1) || x == y) return 0;
  if (letter_is_a(x)) return (m & 1) ? -1 : 1;
  return 1;
}

struct Grading {
  int W = 0;
  int E = 0;
  int e = 0;
  int v = 0;
  int D = 0;
  int crossed = 0;
  int chain_degree(int m) const { return m * W - E; }
  int gc_degree(int m) const { return 1 - m * W + E; }
};

Grading grading_of(const Graph& G);

// Valence of each vertex: incident half-edges plus decoration entries.
std::vector<int> valences(const Graph& G);
int num_components(const Graph& G);

bool is_admissible(const Graph& G, Variant v, Side s);
bool is_admissible_stable(const Graph& G, Family f);

// Koszul sign (with the pair-order correction in the formal model) of
// rearranging the word so that new position k holds old item order[k].
int permutation_sign(const Graph& G, const std::vector<int>& order, int m);
Graph permuted(const Graph& G, const std::vector<int>& order);

// Sign of a relabeling given as a vertex map and a target position for every
// item.  Computed by adjacent transpositions; throws if the relabeled word does
// not have the same unordered structure.
struct Relabeling {
  std::vector<int> vertex;  // old vertex -> new vertex
  std::vector<int> target;  // old item index -> new item index
};
int orientation_sign(const Graph& G, const Relabeling& r, int m);
// Sign of the same rearrangement without the isomorphism check.
int relabeling_sign(const Graph& G, const Relabeling& r, int m);
Graph apply_relabeling(const Graph& G, const Relabeling& r);

std::string debug_string(const Graph& G);

}  // namespace gcx
