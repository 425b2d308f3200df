#include <random>

#include "catch_amalgamated.hpp"
#include "gcx/cgamma.hpp"
#include "gcx/complex.hpp"

using namespace gcx;

TEST_CASE("d_x constants") {
  Rules R = rules_for(Variant::GCEX, Side::CE, 1, 3);
  CHECK(R.cross);
  CHECK(R.sa == 1);
  CHECK(R.sb == -1);
  CHECK(R.sc == 1);
}

TEST_CASE("d squares to zero on small complexes") {
  for (Variant v : {Variant::GC1TP, Variant::GC1, Variant::GCEX})
    for (Side s : {Side::Connected, Side::CE})
      for (int m : {1, 2})
        for (int g = 0; g <= 3; ++g)
          for (int W = 1; W <= 2; ++W) {
            ComplexSpec spec{v, s, g, m, W};
            INFO(spec_label(spec));
            CHECK(d2_defect(assemble_all(enumerate_basis(spec), rules_for(spec))) == 0);
          }
  for (Family f : {Family::JTP, Family::J, Family::K})
    for (int m : {1, 2})
      for (int M = 0; M <= 3; ++M)
        for (int W = 1; W <= 3; ++W) {
          StableSpec spec{f, M, W, m};
          INFO(spec_label(spec));
          CHECK(d2_defect(assemble_all(enumerate_stable_basis(spec), rules_for(spec, 6))) == 0);
        }
}

TEST_CASE("parallel assembly equals the serial reference") {
  for (Variant v : {Variant::GC1TP, Variant::GCEX})
    for (int m : {1, 2}) {
      ComplexSpec spec{v, Side::CE, 3, m, 2};
      auto B = enumerate_basis(spec);
      auto R = rules_for(spec);
      for (const auto& [E, src] : B.strata) {
        auto it = B.strata.find(E - 1);
        if (it == B.strata.end()) continue;
        CHECK(assemble(src, it->second, R) == assemble_serial(src, it->second, R));
      }
    }
}

TEST_CASE("assembly rejects a truncated target stratum") {
  ComplexSpec spec{Variant::GC1TP, Side::Connected, 3, 1, 1};
  auto B = enumerate_basis(spec);
  auto target = B.strata.at(0);
  target.pop_back();
  CHECK_THROWS(assemble(B.strata.at(1), target, rules_for(spec)));
}

TEST_CASE("formal graphs expand compatibly with the differential") {
  // d(expand(G)) = expand(d G) on stable generators at a fixed genus
  for (int m : {1, 2}) {
    StableSpec spec{Family::J, 0, 2, m};
    const int g = 2;
    auto B = enumerate_stable_basis(spec);
    Rules Rf = rules_for(spec, g);
    Rules Rc = rules_for(Variant::GC1, Side::CE, m, g);
    for (const auto& [E, strat] : B.strata)
      for (const auto& enc : strat) {
        FormalSum lhs, rhs;
        for (const auto& [c, k] : expand_formal(decode(enc), m, g))
          for (const auto& [t, a] : differential(decode(c), Rc)) lhs[t] += k * a;
        for (const auto& [t, a] : differential(decode(enc), Rf))
          for (const auto& [c, k] : expand_formal(decode(t), m, g)) rhs[c] += a * k;
        std::erase_if(lhs, [](const auto& p) { return p.second == 0; });
        std::erase_if(rhs, [](const auto& p) { return p.second == 0; });
        INFO(enc);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("C_Gamma: triangle and random cores") {
  auto tri = cgamma_cohomology(CoreGraph{3, {{0, 1}, {1, 2}, {0, 2}}});
  CHECK(tri.at(-3) == 0);
  CHECK(tri.at(-2) == 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto core = random_core(rng, 5, 7);
    auto C = build_cgamma(core);
    auto d = cgamma_differential(C);
    for (const auto& [k, M] : d) {
      auto next = d.find(k + 1);
      if (next == d.end()) continue;
      auto P = multiply(next->second, M);
      for (const auto& col : P.col) CHECK(col.empty());
    }
  }
}
