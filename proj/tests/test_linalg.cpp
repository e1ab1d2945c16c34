#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/linalg.hpp"

using namespace orbitlab;

TEST_CASE("rref, rank and det basics") {
  Mat m = {{1, 2}, {3, 4}};
  CHECK(rank(m) == 2);
  CHECK(det(m) == Rat(-2));
  Mat singular = {{1, 2}, {2, 4}};
  CHECK(rank(singular) == 1);
  CHECK(det(singular) == Rat(0));
}

TEST_CASE("solve and kernel") {
  Mat a = {{1, 1}, {1, -1}};
  Vec b = {4, 2};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(3));
  CHECK((*x)[1] == Rat(1));

  Mat inconsistent = {{1, 1}, {1, 1}};
  CHECK(!solve(inconsistent, Vec{1, 2}).has_value());

  Mat thin = {{1, 1, 1}};
  Mat k = kernel(thin);
  CHECK(k.size() == 2);
  for (const Vec& v : k) {
    Rat s = 0;
    for (const Rat& e : v) s += e;
    CHECK(s == Rat(0));
  }
}

TEST_CASE("inverse round trip") {
  Mat m = {{2, 1}, {1, 1}};
  Mat inv = inverse(m);
  Mat prod = mat_mul(m, inv);
  CHECK(prod[0][0] == Rat(1));
  CHECK(prod[0][1] == Rat(0));
  CHECK(prod[1][0] == Rat(0));
  CHECK(prod[1][1] == Rat(1));
}

TEST_CASE("rank over F_p can drop") {
  // Rows independent over Q but dependent mod 2.
  Mat m = {{1, 1}, {1, -1}};
  CHECK(rank(m) == 2);
  CHECK(rank_mod_p(MatI{{1, 1}, {1, -1}}, 2) == 1);
  CHECK(rank_mod_p(MatI{{1, 1}, {1, -1}}, 3) == 2);
}

TEST_CASE("Hermite normal form is upper triangular with positive pivots") {
  MatI h = hnf_rows(MatI{{2, 1}, {1, 2}});
  REQUIRE(h.size() == 2);
  CHECK(h[1][0] == 0);
  CHECK(h[0][0] > 0);
  CHECK(h[1][1] > 0);
  CHECK(h[0][0] * h[1][1] == 3);  // |det| preserved
}

TEST_CASE("Smith normal form diagonal divisibility") {
  // Pairing matrix of A_2: product of invariant factors is f = 3.
  std::vector<Int> d = snf_diagonal(MatI{{2, -1}, {-1, 2}});
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 3);
  CHECK(d[1] % d[0] == 0);

  std::vector<Int> e = snf_diagonal(MatI{{2, 0}, {0, 4}});
  CHECK(e[0] == 2);
  CHECK(e[1] == 4);
}
