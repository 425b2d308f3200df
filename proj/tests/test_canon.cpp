#include <map>
#include <random>

#include "catch_amalgamated.hpp"
#include "gcx/canon.hpp"
#include "helpers.hpp"

using namespace gcx;

TEST_CASE("double edge and dumbbell vanish") {
  for (int m : {1, 2}) {
    Graph de;
    de.n = 2;
    de.items = {edge(0, 1), edge(0, 1), letter(0, 0), letter(1, 1)};
    CHECK(canonical_form(de, m).sign == 0);
    Graph db;
    db.n = 2;
    db.items = {edge(0, 1), edge(0, 0), edge(1, 1)};
    CHECK(canonical_form(db, m).sign == 0);
    CHECK(canonical_form_bruteforce(db, m).sign == 0);
  }
}

TEST_CASE("tadpole with one decoration survives") {
  Graph ga;
  ga.n = 1;
  ga.items = {edge(0, 0), letter(0, 0)};
  auto c = canonical_form(ga, 1);
  CHECK(c.sign == 1);
  CHECK(c.enc == "v1;1;;0-0;0:a1");
  auto d = decode(c.enc);
  CHECK(d.items == ga.items);
}

TEST_CASE("identical odd decorations vanish") {
  Graph G;
  G.n = 1;
  G.items = {letter(0, 0), letter(0, 0), letter(0, 1)};
  CHECK(canonical_form(G, 1).sign == 0);
  CHECK(canonical_form(G, 2).sign != 0);
}

TEST_CASE("canonical form is invariant under relabeling, concrete") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = 1 + trial % 2;
    Graph G = testing::random_concrete(rng, 5, 6, 5, 2, true, true);
    auto r = testing::random_relabeling(rng, G);
    Graph H = apply_relabeling(G, r);
    int s = relabeling_sign(G, r, m);
    auto cg = canonical_form(G, m);
    auto ch = canonical_form(H, m);
    REQUIRE(cg.enc == ch.enc);
    REQUIRE(cg.sign == ch.sign * s);
    if (cg.sign != 0) {
      // the encoding decodes to a word with sign +1
      auto cd = canonical_form(decode(cg.enc), m);
      REQUIRE(cd.enc == cg.enc);
      REQUIRE(cd.sign == 1);
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling, formal") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = 1 + trial % 2;
    Graph G = testing::random_formal(rng, 4, 4, 4, trial % 3, trial % 2 == 0);
    auto r = testing::random_relabeling(rng, G);
    Graph H = apply_relabeling(G, r);
    int s = relabeling_sign(G, r, m);
    auto cg = canonical_form(G, m);
    auto ch = canonical_form(H, m);
    REQUIRE(cg.enc == ch.enc);
    REQUIRE(cg.sign == ch.sign * s);
    if (cg.sign != 0) {
      auto cd = canonical_form(decode(cg.enc), m);
      REQUIRE(cd.enc == cg.enc);
      REQUIRE(cd.sign == 1);
    }
  }
}

TEST_CASE("refinement search agrees with brute force") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int m = 1 + trial % 2;
    Graph G = trial % 2 ? testing::random_concrete(rng, 5, 7, 4, 2, true, false)
                        : testing::random_formal(rng, 4, 4, 4, trial % 3, true);
    auto a = canonical_form(G, m);
    auto b = canonical_form_bruteforce(G, m);
    REQUIRE((a.sign == 0) == (b.sign == 0));
  }
}

TEST_CASE("crossed nodes joined by a dashed edge vanish") {
  Graph G;
  G.formal = true;
  int t = G.new_token(), u = G.new_token();
  G.pair_tokens(t, u);
  G.items = {cross(t), cross(u)};
  CHECK(canonical_form(G, 1).sign == 0);
  CHECK(canonical_form(G, 2).sign == 0);
}

TEST_CASE("parallel dashed edges and dashed tadpoles are sign free") {
  for (int m : {1, 2}) {
    Graph k1;  // one vertex, two dashed tadpoles
    k1.formal = true;
    k1.n = 1;
    for (int i = 0; i < 4; ++i) k1.items.push_back(letter(0, k1.new_token()));
    k1.pair_tokens(0, 1);
    k1.pair_tokens(2, 3);
    auto c = canonical_form(k1, m);
    CHECK(c.sign != 0);
    CHECK(c.enc == "s1;1;0;0;;v0-v0,v0-v0;");
    Graph th;  // dashed theta
    th.formal = true;
    th.n = 2;
    for (int i = 0; i < 6; ++i) th.items.push_back(letter(i % 2, th.new_token()));
    th.pair_tokens(0, 1);
    th.pair_tokens(2, 3);
    th.pair_tokens(4, 5);
    CHECK(canonical_form(th, m).sign != 0);
  }
}
