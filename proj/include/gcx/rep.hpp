#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcx/enumerate.hpp"

namespace gcx {

// Sp(2g) acts for m odd, O(g,g) for m even.
enum class Group { Sp, O };
Group group_for_parity(int m);
std::string to_string(Group G);

// Weights in epsilon coordinates (length g).  Highest weights are partitions:
// lambda_k <-> (1^k), j lambda_1 + k lambda_2 <-> (j+k, k).
using Weight = std::vector<int>;

Weight from_fundamental(const std::vector<int>& coeffs, int g);
std::vector<int> to_fundamental(const Weight& mu);
// "0", "λ3", "2λ2", "λ2+λ4", ...
std::string weight_label(const Weight& mu);
Weight parse_weight_label(const std::string& s, int g);

// Torus character: weight -> multiplicity (virtual characters allowed).
struct Character {
  int g = 0;
  std::map<Weight, long> mult;

  Character() = default;
  explicit Character(int g) : g(g) {}
  void add(const Weight& w, long c);
  long dimension() const;
  bool empty() const { return mult.empty(); }
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator*(const Character& o) const;
  Character scaled(long c) const;
  Character adams(int k) const;  // x -> x^k
  bool operator==(const Character& o) const { return g == o.g && mult == o.mult; }
};

Character defining_character(int g);
Character exterior_power(const Character& chi, int k);
Character symmetric_power(const Character& chi, int k);

// Weyl dimension.  Throws if mu is not a partition with at most g rows.
// For O(g,g) a partition with exactly g rows labels the sum of the two
// conjugate SO highest weights, so the dimension doubles.
long weyl_dim(Group G, const Weight& mu, int g);
// Same, returning 0 where the label does not exist at this rank.
long weyl_dim_or_zero(Group G, const Weight& mu, int g);

Character irreducible_character(Group G, const Weight& mu, int g);

// Expansion in irreducibles by peeling the lexicographically largest
// dominant weight.  Throws if chi is not Weyl-symmetric.
std::vector<std::pair<Weight, long>> decompose(Group G, const Character& chi);

// Torus character of a concrete basis stratum: a_i -> x_i, b_i -> 1/x_i.
Character chain_character(const std::vector<std::string>& stratum, int g);
// sum_E (-1)^E chain_character(stratum E)
Character equivariant_euler(const ChainBasis& B, int g);

long matching_count(int N);
// Invariants in V^{(x)2N}: trivial-multiplicity via the Weyl alternant (O(2g)
// through its two components).
long invariant_dim(Group G, int g, int N);
// Same dimension from an explicit nullspace: weight-zero tensors killed by the
// root vectors of the Lie algebra (and fixed by a reflection for O).
long invariant_dim_explicit(Group G, int g, int N);

}  // namespace gcx
