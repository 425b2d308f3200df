#include "catch_amalgamated.hpp"
#include "gcx/canon.hpp"
#include "gcx/complex.hpp"

using namespace gcx;

namespace {
std::map<int, size_t> sizes(const ChainBasis& B) {
  std::map<int, size_t> s;
  for (const auto& [E, v] : B.strata)
    if (!v.empty()) s[E] = v.size();
  return s;
}
}  // namespace

TEST_CASE("weight-1 strata at g=3") {
  auto B = enumerate_basis(ComplexSpec{Variant::GC1TP, Side::Connected, 3, 1, 1});
  CHECK(sizes(B) == std::map<int, size_t>{{0, 20}, {1, 6}});
}

TEST_CASE("genus zero weight one is empty") {
  for (Variant v : {Variant::GC1TP, Variant::GC1, Variant::GCEX})
    for (int m : {1, 2}) CHECK(enumerate_basis(ComplexSpec{v, Side::Connected, 0, m, 1}).total() == 0);
}

TEST_CASE("orderly enumeration matches the naive generator") {
  for (Variant v : {Variant::GC1TP, Variant::GC1, Variant::GCEX})
    for (Side s : {Side::Connected, Side::CE})
      for (int m : {1, 2})
        for (int g = 0; g <= 2; ++g)
          for (int W = 1; W <= 2; ++W) {
            if (g == 2 && W == 2 && s == Side::CE) continue;  // naive generator too slow
            ComplexSpec spec{v, s, g, m, W};
            INFO(spec_label(spec));
            CHECK(enumerate_basis(spec) == enumerate_basis_naive(spec));
          }
}

TEST_CASE("basis elements are admissible canonical representatives") {
  for (Variant v : {Variant::GC1TP, Variant::GC1, Variant::GCEX})
    for (Side s : {Side::Connected, Side::CE})
      for (int m : {1, 2}) {
        ComplexSpec spec{v, s, 2, m, 2};
        for (const auto& [E, strat] : enumerate_basis(spec).strata) {
          CHECK(std::is_sorted(strat.begin(), strat.end()));
          for (const auto& enc : strat) {
            Graph G = decode(enc);
            REQUIRE(is_admissible(G, v, s));
            auto c = canonical_form(G, m);
            REQUIRE(c.enc == enc);
            REQUIRE(c.sign == 1);
          }
        }
      }
}

TEST_CASE("stable bases are admissible and canonical") {
  for (Family f : {Family::JTP, Family::J, Family::K})
    for (int m : {1, 2})
      for (int M = 0; M <= 2; ++M) {
        auto B = enumerate_stable_basis(StableSpec{f, M, 2, m});
        for (const auto& [E, strat] : B.strata)
          for (const auto& enc : strat) {
            Graph G = decode(enc);
            REQUIRE(is_admissible_stable(G, f));
            REQUIRE(canonical_form(G, m).enc == enc);
          }
      }
  CHECK(enumerate_stable_basis(StableSpec{Family::J, 0, 2, 1}).total() > 0);
}

TEST_CASE("stratum cap raises ResourceLimit") {
  Limits lim;
  lim.max_stratum = 5;
  CHECK_THROWS_AS(enumerate_basis(ComplexSpec{Variant::GC1TP, Side::Connected, 3, 1, 1}, lim), ResourceLimit);
}
