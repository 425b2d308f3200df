#include "catch_amalgamated.hpp"
#include "gcx/graph.hpp"

using namespace gcx;

TEST_CASE("orientation sign of simple relabelings") {
  Graph tri;
  tri.n = 3;
  tri.items = {edge(0, 1), edge(1, 2), edge(0, 2)};
  Relabeling id{{0, 1, 2}, {0, 1, 2}};
  CHECK(orientation_sign(tri, id, 1) == 1);
  // swap two edges, vertices fixed
  Relabeling sw{{0, 1, 2}, {1, 0, 2}};
  CHECK(orientation_sign(tri, sw, 1) == -1);
  CHECK(orientation_sign(tri, sw, 0) == -1);

  Graph v;
  v.n = 1;
  v.items = {letter(0, 0), letter(0, 1)};
  Relabeling sd{{0}, {1, 0}};
  CHECK(orientation_sign(v, sd, 1) == -1);
  CHECK(orientation_sign(v, sd, 2) == 1);

  Relabeling bad{{0, 1, 2}, {0, 0, 1}};
  CHECK_THROWS(orientation_sign(tri, bad, 1));
}

TEST_CASE("relabeling that is not an isomorphism is rejected") {
  Graph G;
  G.n = 2;
  G.items = {edge(0, 1), letter(0, 0), letter(0, 1), letter(1, 2)};
  Relabeling r{{1, 0}, {0, 1, 2, 3}};
  CHECK_THROWS(orientation_sign(G, r, 1));
}

TEST_CASE("grading") {
  Graph G;
  G.n = 1;
  G.items = {letter(0, 0), letter(0, 1), letter(0, 2)};
  auto gr = grading_of(G);
  CHECK(gr.W == 1);
  CHECK(gr.E == 0);
  CHECK(gr.gc_degree(1) == 0);
  CHECK(gr.gc_degree(3) == -2);

  Graph X;
  X.items = {cross(0)};
  gr = grading_of(X);
  CHECK(gr.W == 1);
  CHECK(gr.E == -1);
  CHECK(gr.chain_degree(1) == 2);

  Graph F;
  F.n = 1;
  F.items = {letter(0, 0), letter(0, 1), letter(0, 2), letter(0, 3)};
  CHECK(grading_of(F).W == 2);
}

TEST_CASE("admissibility") {
  Graph ga;  // tadpole + one decoration
  ga.n = 1;
  ga.items = {edge(0, 0), letter(0, 0)};
  CHECK(is_admissible(ga, Variant::GC1TP, Side::Connected));
  CHECK_FALSE(is_admissible(ga, Variant::GC1, Side::Connected));

  Graph two;
  two.n = 1;
  two.items = {letter(0, 0), letter(0, 1)};
  CHECK_FALSE(is_admissible(two, Variant::GC1, Side::Connected));

  Graph dis;
  dis.n = 2;
  dis.items = {letter(0, 0), letter(0, 1), letter(0, 2), letter(1, 0), letter(1, 1), letter(1, 3)};
  CHECK_FALSE(is_admissible(dis, Variant::GC1, Side::Connected));
  CHECK(is_admissible(dis, Variant::GC1, Side::CE));

  Graph w;
  w.n = 1;
  w.items = {omega(0), letter(0, 0), letter(0, 1)};
  CHECK_FALSE(is_admissible(w, Variant::GC1, Side::Connected));
  CHECK(is_admissible(w, Variant::GCEX, Side::Connected));

  Graph x;
  x.items = {cross(1)};
  CHECK(is_admissible(x, Variant::GCEX, Side::Connected));
  CHECK(is_admissible(x, Variant::GCEX, Side::CE));
  CHECK_FALSE(is_admissible(x, Variant::GC1, Side::CE));
}

TEST_CASE("letters and pairing") {
  CHECK(letter_name(0) == "a1");
  CHECK(letter_name(3) == "b2");
  CHECK(parse_letter("b2") == 3);
  CHECK(pairing(0, 1, 1) == 1);
  CHECK(pairing(1, 0, 1) == -1);
  CHECK(pairing(1, 0, 2) == 1);
  CHECK(pairing(0, 2, 1) == 0);
  CHECK(diag_coeff(0, 1, 1) == -1);
  CHECK(diag_coeff(1, 0, 1) == 1);
}
