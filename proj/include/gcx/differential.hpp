#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcx/canon.hpp"
#include "gcx/graph.hpp"

namespace gcx {

// Which pieces of the total differential act, and which outputs survive.
struct Rules {
  int m = 1;              // only the parity matters for the structure
  int g = 0;              // enters only through the dashed tadpole contraction
  bool tadpoles = false;  // solid tadpoles admissible
  bool ex = false;        // omega terms of Delta, d_mul''
  bool cross = false;     // d_x rules (a) and (b) (CE side of the extended complex)
  bool island = false;    // d_x rule (c)
  bool connected = false; // drop disconnected outputs
  bool stable = false;    // formal letters
  // relative constants of the d_x rules, fixed by d^2 = 0
  int sa = 1, sb = -1, sc = 1;
};

Rules rules_for(Variant v, Side s, int m, int g);
Rules rules_for(Family f, int m, int g);

struct Term {
  int64_t coeff;
  Graph graph;
};

// Raw pieces, uncanonicalized and unfiltered.  Each term already carries the
// sign of bringing the acted-on items to the front of the word.
std::vector<Term> d_contract(const Graph& G, const Rules& R);   // -d_c'
std::vector<Term> d_cut(const Graph& G, const Rules& R);
std::vector<Term> d_mul2(const Graph& G, const Rules& R);      // d_mul''
std::vector<Term> d_cross(const Graph& G, const Rules& R);     // d_x

// Total differential as a canonical formal sum (encoding -> coefficient).
using FormalSum = std::unordered_map<std::string, int64_t>;
FormalSum differential(const Graph& G, const Rules& R);
void add_terms(FormalSum& out, const std::vector<Term>& terms, const Rules& R, int64_t scale = 1);
bool admissible(const Graph& G, const Rules& R);

// Concrete expansion of a formal graph at genus g: sum over letter
// assignments of the dashed pairs, canonicalized in the concrete model.
FormalSum expand_formal(const Graph& G, int m, int g);

}  // namespace gcx
