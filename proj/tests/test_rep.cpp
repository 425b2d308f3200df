#include "catch_amalgamated.hpp"
#include "gcx/rep.hpp"

using namespace gcx;

namespace {
std::vector<std::pair<Weight, long>> dec(std::initializer_list<std::pair<std::vector<int>, long>> l, int g) {
  std::vector<std::pair<Weight, long>> out;
  for (const auto& [f, c] : l) out.push_back({from_fundamental(f, g), c});
  std::sort(out.begin(), out.end());
  return out;
}
std::vector<std::pair<Weight, long>> sorted(std::vector<std::pair<Weight, long>> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("weight labels") {
  CHECK(weight_label(from_fundamental({0, 0, 1}, 4)) == "λ3");
  CHECK(weight_label(from_fundamental({0, 1, 0, 1}, 6)) == "λ2+λ4");
  CHECK(weight_label(from_fundamental({3}, 2)) == "3λ1");
  CHECK(weight_label(Weight(3, 0)) == "0");
  CHECK(parse_weight_label("2λ2", 5) == from_fundamental({0, 2}, 5));
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(Group::Sp, from_fundamental({1}, 3), 3) == 6);
  CHECK(weyl_dim(Group::Sp, from_fundamental({0, 0, 1}, 3), 3) == 14);
  CHECK(weyl_dim(Group::Sp, from_fundamental({0, 1}, 3), 3) == 14);
  CHECK(weyl_dim(Group::Sp, from_fundamental({0, 2}, 3), 3) == 90);
  CHECK(weyl_dim(Group::Sp, from_fundamental({0, 0, 1}, 6), 6) == 208);
  CHECK(weyl_dim(Group::O, from_fundamental({1}, 3), 3) == 6);
  CHECK(weyl_dim(Group::O, from_fundamental({3}, 6), 6) == 352);
  CHECK(weyl_dim(Group::O, from_fundamental({0, 0, 1}, 3), 3) == 20);  // both SO(6) components
  CHECK_THROWS(weyl_dim(Group::Sp, from_fundamental({0, 0, 1}, 4), 2));
  CHECK(weyl_dim_or_zero(Group::Sp, Weight{1, 1, 1}, 2) == 0);
}

TEST_CASE("irreducible characters have Weyl dimension and decompose to themselves") {
  for (Group G : {Group::Sp, Group::O})
    for (int g = 1; g <= 4; ++g)
      for (auto f : std::vector<std::vector<int>>{{1}, {2}, {0, 1}, {1, 1}, {3}}) {
        if (f.size() > size_t(g)) continue;
        Weight w = from_fundamental(f, g);
        auto chi = irreducible_character(G, w, g);
        CHECK(chi.dimension() == weyl_dim(G, w, g));
        CHECK(decompose(G, chi) == std::vector<std::pair<Weight, long>>{{w, 1}});
      }
}

TEST_CASE("plethysms at g=6") {
  auto V = defining_character(6);
  CHECK(sorted(decompose(Group::Sp, exterior_power(V, 4))) == dec({{{0}, 1}, {{0, 1}, 1}, {{0, 0, 0, 1}, 1}}, 6));
  CHECK(sorted(decompose(Group::Sp, symmetric_power(exterior_power(V, 2), 2))) ==
        dec({{{0}, 2}, {{0, 1}, 2}, {{0, 0, 0, 1}, 1}, {{0, 2}, 1}}, 6));
  CHECK(sorted(decompose(Group::O, symmetric_power(V, 4))) == dec({{{0}, 1}, {{2}, 1}, {{4}, 1}}, 6));
  auto A = irreducible_character(Group::Sp, from_fundamental({0, 0, 1}, 6), 6);
  CHECK(sorted(decompose(Group::Sp, exterior_power(A, 2))) ==
        dec({{{0}, 1}, {{0, 1}, 1}, {{0, 0, 0, 1}, 1}, {{0, 0, 0, 0, 0, 1}, 1}, {{0, 2}, 1}, {{0, 1, 0, 1}, 1}}, 6));
}

TEST_CASE("decompose rejects non-symmetric characters") {
  Character chi(2);
  chi.add(Weight{1, 0}, 1);
  CHECK_THROWS(decompose(Group::Sp, chi));
}

TEST_CASE("invariants of tensor powers") {
  const std::vector<long> sp1 = {1, 1, 2, 5, 14}, sp2 = {1, 1, 3, 14, 84};
  const std::vector<long> o1 = {1, 1, 3, 10, 35}, o2 = {1, 1, 3, 15, 105};
  for (int N = 0; N <= 4; ++N) {
    CHECK(invariant_dim(Group::Sp, 1, N) == sp1[N]);
    CHECK(invariant_dim(Group::Sp, 2, N) == sp2[N]);
    CHECK(invariant_dim(Group::O, 1, N) == o1[N]);
    CHECK(invariant_dim(Group::O, 2, N) == o2[N]);
  }
  for (int N = 1; N <= 4; ++N) CHECK(invariant_dim(Group::Sp, N, N) == matching_count(N));
  CHECK(matching_count(4) == 105);
  for (auto [g, N] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}})
    for (Group G : {Group::Sp, Group::O}) CHECK(invariant_dim_explicit(G, g, N) == invariant_dim(G, g, N));
}
