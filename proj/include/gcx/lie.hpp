#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gcx/enumerate.hpp"

namespace gcx {

// Dimensions by weight (weight >= 1) with the parity of each weight piece.
struct GradedDims {
  std::map<int, long> dim;
  std::map<int, int> parity;  // 0 even, 1 odd

  long at(int w) const {
    auto it = dim.find(w);
    return it == dim.end() ? 0 : it->second;
  }
  bool operator==(const GradedDims&) const = default;
};

// Quadratic presentation FreeLie(V)/<R>.  All generators share one parity.
// Relations are vectors over weight2_basis(n, parity).
struct QuadraticPresentation {
  int n = 0;
  int parity = 0;
  std::vector<std::vector<long>> R;
};

// Basis of FreeLie(V)_2: [x_i,x_j] for i < j, plus [x_i,x_i] when odd.
std::vector<std::pair<int, int>> weight2_basis(int n, int parity);

// dim FreeLie(V)_w for w <= Wmax, from T(V) = U(FreeLie(V)) by PBW.
GradedDims free_lie_dims(int n, int parity, int Wmax);
// Same numbers by ranking all right-normed brackets inside T(V).
GradedDims free_lie_dims_explicit(int n, int parity, int Wmax);

GradedDims free_lie_quotient_dims(const QuadraticPresentation& P, int Wmax);

// w_g and its central extension w_g^fr; generators have parity (1 - m) mod 2.
QuadraticPresentation wg_presentation(int g, int m);
GradedDims wg_dims(int g, int m, int Wmax);
GradedDims wgfr_dims(int g, int m, int Wmax);

// Hilbert series coefficients 1, h_1, ..., h_Wmax.
std::vector<long> pbw_series(const GradedDims& L, int Wmax);
std::vector<long> hilbert_series(const GradedDims& A, int Wmax);  // A_0 = 1

// h_{U(t)}(s) * h_A(-s) == 1 through s^Wmax.  Parities of t are taken from
// t.parity where present, else generator parity times weight.
bool koszul_identity_check(const GradedDims& t, const GradedDims& a, int parity, int Wmax);

// Euler characteristic by weight of the free graded-commutative algebra on a
// complex of generators.  gens[(W,E)] = dim; a generator is odd iff E + mW is.
std::map<int, long> symmetric_algebra_euler(const std::map<std::pair<int, int>, long>& gens, int m, int Wmax);

// Chain dims by (W,E) of the connected complex for weights 1..Wmax.
std::map<std::pair<int, int>, long> connected_chain_dims(Variant v, int g, int m, int Wmax, const Limits& lim = {});

// dim Lambda^2 of an n-dimensional space of the given parity, super sense.
long super_exterior_square(long n, int parity);

}  // namespace gcx
