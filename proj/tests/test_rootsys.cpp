#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/rootsys.hpp"

#include <algorithm>

using namespace orbitlab;

namespace {

std::vector<RootSystem> test_grid() {
  std::vector<RootSystem> out;
  for (int r = 1; r <= 5; ++r) out.push_back(build_root_system(Type::A, r));
  for (int r = 2; r <= 4; ++r) out.push_back(build_root_system(Type::B, r));
  for (int r = 2; r <= 4; ++r) out.push_back(build_root_system(Type::C, r));
  for (int r = 3; r <= 4; ++r) out.push_back(build_root_system(Type::D, r));
  return out;
}

}  // namespace

TEST_CASE("root counts and Weyl orders") {
  const RootSystem a1 = build_root_system(Type::A, 1);
  CHECK(a1.positive_roots.size() == 1);
  CHECK(a1.weyl_order == 2);

  const RootSystem b2 = build_root_system(Type::B, 2);
  CHECK(b2.positive_roots.size() == 4);
  CHECK(b2.weyl_order == 8);

  const RootSystem d4 = build_root_system(Type::D, 4);
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.weyl_order == 192);
}

TEST_CASE("unsupported ranks are rejected") {
  CHECK_THROWS_AS(build_root_system(Type::A, 0), UnsupportedError);
  CHECK_THROWS_AS(build_root_system(Type::B, 1), UnsupportedError);
  CHECK_THROWS_AS(build_root_system(Type::C, 1), UnsupportedError);
  CHECK_THROWS_AS(build_root_system(Type::D, 2), UnsupportedError);
}

TEST_CASE("affine marks") {
  auto mark_list = [](Type t, int r) {
    const ExtendedDiagram ext = marks(build_root_system(t, r));
    return ext.marks;
  };
  CHECK(mark_list(Type::A, 1) == std::vector<Int>{1, 1});
  CHECK(mark_list(Type::A, 2) == std::vector<Int>{1, 1, 1});
  CHECK(mark_list(Type::B, 2) == std::vector<Int>{1, 1, 2});
}

TEST_CASE("marks satisfy sum c_alpha * alpha = 0") {
  for (const RootSystem& rs : test_grid()) {
    const ExtendedDiagram ext = marks(rs);
    REQUIRE(ext.node_roots.size() == static_cast<size_t>(rs.rank + 1));
    CHECK(ext.marks[0] == 1);
    VecI total(rs.ambient, 0);
    for (size_t i = 0; i < ext.node_roots.size(); ++i)
      for (int k = 0; k < rs.ambient; ++k) total[k] += ext.marks[i] * ext.node_roots[i][k];
    for (const Int& v : total) CHECK(v == 0);
  }
}

TEST_CASE("connection index") {
  auto f_of = [](Type t, int r) {
    return connection_index(build_root_system(t, r)).connection_index;
  };
  CHECK(f_of(Type::A, 1) == 2);
  CHECK(f_of(Type::A, 2) == 3);
  CHECK(f_of(Type::A, 4) == 5);
  CHECK(f_of(Type::B, 3) == 2);
  CHECK(f_of(Type::C, 3) == 2);
  CHECK(f_of(Type::D, 4) == 4);
}

TEST_CASE("coweight basis pairs integrally with coroots") {
  for (const RootSystem& rs : test_grid()) {
    const LatticeData ld = connection_index(rs);
    // <alpha_i, coweight_j> = delta_ij by construction.
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Rat pairing = 0;
        for (int k = 0; k < rs.ambient; ++k)
          pairing += Rat(rs.simple_roots[i][k]) * ld.coweight_basis[j][k];
        CHECK(pairing == (i == j ? Rat(1) : Rat(0)));
      }
  }
}

TEST_CASE("regular primes") {
  CHECK(is_regular_prime(build_root_system(Type::A, 2), 5));
  CHECK(is_regular_prime(build_root_system(Type::B, 2), 3));
  // Type A: p is regular iff p does not divide n.
  CHECK(!is_regular_prime(build_root_system(Type::A, 2), 3));
  CHECK(!is_regular_prime(build_root_system(Type::A, 3), 2));
  CHECK(is_regular_prime(build_root_system(Type::A, 3), 3));
  // B/C/D: only p = 2 is irregular.
  CHECK(!is_regular_prime(build_root_system(Type::B, 2), 2));
  CHECK(!is_regular_prime(build_root_system(Type::C, 3), 2));
  CHECK(!is_regular_prime(build_root_system(Type::D, 3), 2));
  CHECK(is_regular_prime(build_root_system(Type::D, 4), 3));
}

TEST_CASE("matroid scan agrees with the closed-form table") {
  for (const RootSystem& rs : test_grid())
    for (long long p : {2, 3, 5, 7})
      CHECK(is_regular_prime(rs, p) == is_regular_prime_cached(rs, p, 0));
}

TEST_CASE("scan above the rank cap is undecided, cache falls back") {
  const RootSystem a5 = build_root_system(Type::A, 5);
  CHECK_THROWS_AS(is_regular_prime(a5, 5, 2), UndecidedError);
  CHECK(is_regular_prime_cached(a5, 5, 2));
  CHECK(!is_regular_prime_cached(a5, 3, 2));  // 3 | 6
}

TEST_CASE("exponents") {
  CHECK(exponents(build_root_system(Type::A, 2)) == std::vector<int>{1, 2});
  CHECK(exponents(build_root_system(Type::B, 2)) == std::vector<int>{1, 3});
  CHECK(exponents(build_root_system(Type::C, 4)) == std::vector<int>{1, 3, 5, 7});
  CHECK(exponents(build_root_system(Type::D, 4)) == std::vector<int>{1, 3, 3, 5});
}

TEST_CASE("sum of exponents equals the number of positive roots") {
  for (const RootSystem& rs : test_grid()) {
    int total = 0;
    for (int m : exponents(rs)) total += m;
    CHECK(total == static_cast<int>(rs.positive_roots.size()));
  }
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(build_root_system(Type::A, 4)).empty());
  CHECK(bad_primes(build_root_system(Type::B, 3)) == std::set<long long>{2});
  CHECK(bad_primes(build_root_system(Type::C, 3)) == std::set<long long>{2});
  CHECK(bad_primes(build_root_system(Type::D, 4)) == std::set<long long>{2});
}

TEST_CASE("reflection fixes the orthogonal complement and negates the root") {
  for (const RootSystem& rs : test_grid())
    for (const VecI& alpha : rs.positive_roots) {
      VecI neg = alpha;
      for (Int& v : neg) v = -v;
      CHECK(reflect(alpha, alpha) == neg);
      // Reflections permute the root set.
      for (const VecI& beta : rs.positive_roots) {
        const VecI img = reflect(beta, alpha);
        VecI mimg = img;
        for (Int& v : mimg) v = -v;
        const bool in_set =
            std::find(rs.positive_roots.begin(), rs.positive_roots.end(), img) !=
                rs.positive_roots.end() ||
            std::find(rs.positive_roots.begin(), rs.positive_roots.end(), mimg) !=
                rs.positive_roots.end();
        CHECK(in_set);
      }
    }
}
