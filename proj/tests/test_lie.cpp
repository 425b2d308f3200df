#include "catch_amalgamated.hpp"
#include "gcx/lie.hpp"

using namespace gcx;

namespace {
std::vector<long> seq(const GradedDims& d, int Wmax) {
  std::vector<long> v;
  for (int w = 1; w <= Wmax; ++w) v.push_back(d.at(w));
  return v;
}
}  // namespace

TEST_CASE("free Lie dimensions: Witt formula and explicit brackets") {
  CHECK(seq(free_lie_dims(2, 0, 6), 6) == std::vector<long>{2, 1, 2, 3, 6, 9});
  CHECK(seq(free_lie_dims(3, 0, 4), 4) == std::vector<long>{3, 3, 8, 18});
  for (int n = 1; n <= 3; ++n)
    for (int p : {0, 1}) CHECK(free_lie_dims(n, p, 5) == free_lie_dims_explicit(n, p, 5));
  // one odd generator: x and [x,x]
  CHECK(seq(free_lie_dims(1, 1, 4), 4) == std::vector<long>{1, 1, 0, 0});
}

TEST_CASE("weight-2 basis") {
  CHECK(weight2_basis(3, 0).size() == 3);
  CHECK(weight2_basis(3, 1).size() == 6);
  CHECK(super_exterior_square(4, 0) == 6);
  CHECK(super_exterior_square(4, 1) == 10);
}

TEST_CASE("dependent relations are rejected") {
  QuadraticPresentation P{3, 0, {{1, 0, 0}, {2, 0, 0}}};
  CHECK_THROWS(free_lie_quotient_dims(P, 3));
}

TEST_CASE("framed surface Lie algebras") {
  CHECK(seq(wgfr_dims(1, 1, 3), 3) == std::vector<long>{2, 1, 0});
  CHECK(seq(wgfr_dims(1, 2, 3), 3) == std::vector<long>{2, 3, 0});
  CHECK(seq(wgfr_dims(2, 1, 6), 6) == std::vector<long>{4, 6, 16, 45, 144, 440});
  CHECK(seq(wgfr_dims(3, 1, 5), 5) == std::vector<long>{6, 15, 64, 280, 1344});
  auto e = wgfr_dims(3, 2, 5);
  CHECK(seq(e, 5) == std::vector<long>{6, 21, 64, 280, 1344});
  CHECK(e.parity.at(1) == 1);
  CHECK(e.parity.at(2) == 0);
}

TEST_CASE("Koszul identity for a free Lie algebra and its dual") {
  for (int n = 1; n <= 4; ++n)
    for (int p : {0, 1}) {
      GradedDims A;
      A.dim[1] = n;
      CHECK(koszul_identity_check(free_lie_dims(n, p, 5), A, p, 5));
      A.dim[2] = 1;
      CHECK_FALSE(koszul_identity_check(free_lie_dims(n, p, 5), A, p, 5));
    }
}

TEST_CASE("symmetric algebra Euler characteristic") {
  // one even generator of weight 1: 1/(1-s)
  auto a = symmetric_algebra_euler({{{1, 0}, 1}}, 2, 4);
  CHECK(a == std::map<int, long>{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  // two odd generators of weight 1: (1+s)^2
  auto b = symmetric_algebra_euler({{{1, 0}, 2}}, 1, 4);
  CHECK(b == std::map<int, long>{{1, 2}, {2, 1}, {3, 0}, {4, 0}});
}
