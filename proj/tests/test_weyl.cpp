#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/genus.hpp"
#include "orbitlab/weyl.hpp"

#include <algorithm>

using namespace orbitlab;

TEST_CASE("group orders") {
  CHECK(build_weyl(build_root_system(Type::A, 1)).elements.size() == 2);
  CHECK(build_weyl(build_root_system(Type::B, 2)).elements.size() == 8);
  CHECK(build_weyl(build_root_system(Type::D, 3)).elements.size() == 24);
}

TEST_CASE("group axioms on B2") {
  const RootSystem rs = build_root_system(Type::B, 2);
  const WeylGroup w = build_weyl(rs);
  const WeylElement id = identity_element(rs.ambient);
  for (const WeylElement& g : w.elements) {
    CHECK(compose(g, inverse(g)) == id);
    CHECK(compose(inverse(g), g) == id);
  }
  // Closed under composition.
  for (const WeylElement& g : w.elements)
    for (const WeylElement& h : w.elements)
      CHECK(std::find(w.elements.begin(), w.elements.end(), compose(g, h)) !=
            w.elements.end());
}

TEST_CASE("simple reflections generate the group") {
  for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
    const int r = t == Type::D ? 3 : 2;
    const RootSystem rs = build_root_system(t, r);
    const WeylGroup w = build_weyl(rs);
    CHECK(Int(generate_subgroup(simple_reflections(rs), rs.ambient).size()) == w.order);
  }
}

TEST_CASE("fixed space dimensions") {
  const RootSystem a2 = build_root_system(Type::A, 2);
  CHECK(dim_fix(identity_element(3), a2) == 2);
  // A transposition fixes a line in the sum-zero plane.
  WeylElement swap = identity_element(3);
  std::swap(swap.perm[0], swap.perm[1]);
  CHECK(dim_fix(swap, a2) == 1);

  const RootSystem b2 = build_root_system(Type::B, 2);
  WeylElement minus = identity_element(2);
  minus.sign = {-1, -1};
  CHECK(dim_fix(minus, b2) == 0);
  CHECK(sgn(minus, b2) == 1);
  CHECK(sgn(identity_element(2), b2) == 1);
}

TEST_CASE("Shephard-Todd sums") {
  auto st = [](Type t, int r, long long q) {
    const RootSystem rs = build_root_system(t, r);
    return shephard_todd_sum(build_weyl(rs), rs, q);
  };
  auto sst = [](Type t, int r, long long q) {
    const RootSystem rs = build_root_system(t, r);
    return signed_shephard_todd_sum(build_weyl(rs), rs, q);
  };
  CHECK(st(Type::A, 1, 5) == 6);
  CHECK(st(Type::A, 2, 5) == 42);
  CHECK(st(Type::B, 2, 5) == 48);
  CHECK(sst(Type::A, 1, 5) == 4);
  CHECK(sst(Type::A, 2, 5) == 12);
  CHECK(sst(Type::B, 2, 5) == 8);
}

TEST_CASE("Shephard-Todd equals the exponent products on a grid") {
  for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
    const int r = t == Type::D ? 3 : (t == Type::A ? 3 : 3);
    const RootSystem rs = build_root_system(t, r);
    const WeylGroup w = build_weyl(rs);
    for (long long q : {2, 3, 5}) {
      Int plus = 1, minus = 1;
      for (int m : exponents(rs)) {
        plus *= Int(q) + m;
        minus *= Int(q) - m;
      }
      CHECK(shephard_todd_sum(w, rs, q) == plus);
      CHECK(signed_shephard_todd_sum(w, rs, q) == minus);
    }
  }
}

TEST_CASE("lattice quotient sizes") {
  CHECK(build_lattice_quotient(build_root_system(Type::A, 1), 5).reps.size() == 10);
  CHECK(build_lattice_quotient(build_root_system(Type::A, 1), 2).reps.size() == 4);
  CHECK(build_lattice_quotient(build_root_system(Type::A, 2), 2).reps.size() == 12);
}

TEST_CASE("fixed points on the quotient") {
  const RootSystem a1 = build_root_system(Type::A, 1);
  const LatticeQuotient lq5 = build_lattice_quotient(a1, 5);
  const WeylGroup w = build_weyl(a1);
  for (const WeylElement& g : w.elements) {
    if (g == identity_element(2))
      CHECK(fixed_points(lq5, g, a1) == 10);  // f * q^r
    else
      CHECK(fixed_points(lq5, g, a1) == 2);  // f * q^0
  }

  // 3-cycle on A_2 at q = 2 fixes f * q^0 = 3 points.
  const RootSystem a2 = build_root_system(Type::A, 2);
  const LatticeQuotient lq2 = build_lattice_quotient(a2, 2);
  WeylElement cyc = identity_element(3);
  cyc.perm = {1, 2, 0};
  CHECK(fixed_points(lq2, cyc, a2) == 3);
}

TEST_CASE("Burnside counts match the subset sums") {
  const RootSystem a1 = build_root_system(Type::A, 1);
  const WeylGroup w1 = build_weyl(a1);
  CHECK(burnside_orbit_count(build_lattice_quotient(a1, 5), w1, a1) == 6);
  CHECK(burnside_orbit_count(build_lattice_quotient(a1, 3), w1, a1) == 4);

  const RootSystem a2 = build_root_system(Type::A, 2);
  const WeylGroup w2 = build_weyl(a2);
  const LatticeQuotient lq = build_lattice_quotient(a2, 2);
  const ExtendedDiagram ext = marks(a2);
  Int p_sum = 0;
  for (SubsetBits s : enumerate_proper_subsets(ext)) p_sum += p_of(s, ext, 2);
  CHECK(p_sum == 6);
  CHECK(burnside_orbit_count(lq, w2, a2) == 6);
  CHECK(orbit_count_unionfind(lq, a2) == 6);
}

TEST_CASE("signed inner products") {
  const RootSystem a1 = build_root_system(Type::A, 1);
  const WeylGroup w1 = build_weyl(a1);
  CHECK(sgn_inner_product(build_lattice_quotient(a1, 5), w1, a1) == 4);
  CHECK(sgn_inner_product(build_lattice_quotient(a1, 3), w1, a1) == 2);

  const RootSystem a2 = build_root_system(Type::A, 2);
  const WeylGroup w2 = build_weyl(a2);
  CHECK(sgn_inner_product(build_lattice_quotient(a2, 5), w2, a2) == 6);
}

TEST_CASE("type A dim_fix shortcut agrees with explicit fixed-space rank") {
  // Compare against 'number of cycles - 1' computed through the action on
  // the quotient-free reflection representation: dim fix(w) of a
  // permutation on the sum-zero subspace is (#cycles - 1).
  const RootSystem a3 = build_root_system(Type::A, 3);
  const WeylGroup w = build_weyl(a3);
  for (const WeylElement& g : w.elements) {
    std::vector<bool> seen(4, false);
    int cycles = 0;
    for (int i = 0; i < 4; ++i) {
      if (seen[i]) continue;
      ++cycles;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = g.perm[j];
      }
    }
    CHECK(dim_fix(g, a3) == cycles - 1);
  }
}

TEST_CASE("group enumeration respects the cap") {
  CHECK_THROWS_AS(build_weyl(build_root_system(Type::B, 5), Int(100)), CapExceededError);
}
