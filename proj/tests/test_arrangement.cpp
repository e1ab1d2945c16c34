#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/arrangement.hpp"

using namespace orbitlab;

namespace {

std::vector<Int> chi(const Arrangement& arr) {
  return char_poly(build_intersection_lattice(arr));
}

}  // namespace

TEST_CASE("empty arrangement in R^1") {
  Arrangement arr{1, {}};
  const IntersectionLattice lat = build_intersection_lattice(arr);
  CHECK(lat.elements.size() == 1);
  // chi = t
  const std::vector<Int> c = char_poly(lat);
  CHECK(eval_poly(c, 7) == 7);
}

TEST_CASE("braid arrangement of rank 2") {
  const ReflectionArrangement ra = reflection_arrangement(build_root_system(Type::A, 2));
  const IntersectionLattice lat = build_intersection_lattice(ra.arr);
  CHECK(lat.elements.size() == 5);  // V, 3 lines, origin
  const std::vector<Int> c = char_poly(lat);
  for (long long t : {2, 3, 5, 7, 11})
    CHECK(eval_poly(c, t) == Int(t - 1) * (t - 2));
}

TEST_CASE("B2 reflection arrangement") {
  const ReflectionArrangement ra = reflection_arrangement(build_root_system(Type::B, 2));
  const IntersectionLattice lat = build_intersection_lattice(ra.arr);
  CHECK(lat.elements.size() == 6);  // V, 4 lines, origin
  const std::vector<Int> c = char_poly(lat);
  for (long long t : {2, 3, 5, 7, 11})
    CHECK(eval_poly(c, t) == Int(t - 1) * (t - 3));
}

TEST_CASE("characteristic polynomial equals the exponent product") {
  for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
    const int r = t == Type::D ? 3 : 3;
    const RootSystem rs = build_root_system(t, r);
    const std::vector<Int> c = chi(reflection_arrangement(rs).arr);
    for (long long q : {2, 5, 11}) {
      Int prod = 1;
      for (int m : exponents(rs)) prod *= Int(q) - m;
      CHECK(eval_poly(c, q) == prod);
    }
  }
}

TEST_CASE("Moebius recurrence holds") {
  const ReflectionArrangement ra = reflection_arrangement(build_root_system(Type::B, 2));
  const IntersectionLattice lat = build_intersection_lattice(ra.arr);
  // sum over Z >= X of mu(Z) is 0 unless X = V.
  for (size_t x = 1; x < lat.elements.size(); ++x) {
    Int total = 0;
    for (size_t z = 0; z < lat.elements.size(); ++z) {
      // Z contains X iff every basis row of Z reduces into X's row space? No:
      // containment of subspaces Z >= X iff X's rows lie in Z's row space.
      bool contains = true;
      for (const Vec& row : lat.elements[x])
        if (!in_row_space(lat.elements[z], row)) contains = false;
      if (contains) total += lat.moebius[z];
    }
    CHECK(total == 0);
  }
}

TEST_CASE("restriction to the full space is the identity") {
  const ReflectionArrangement ra = reflection_arrangement(build_root_system(Type::A, 2));
  Mat full(2, Vec(2, 0));
  full[0][0] = 1;
  full[1][1] = 1;
  const RestrictedArrangement r = restrict_arrangement(ra.arr, full);
  CHECK(r.arr.normals.size() == ra.arr.normals.size());
}

TEST_CASE("restriction of the braid plane to a line") {
  const ReflectionArrangement ra = reflection_arrangement(build_root_system(Type::A, 2));
  // X = one of the reflection lines: kernel of the first normal.
  Mat line(1, Vec(2));
  const Vec& n0 = ra.arr.normals[0];
  line[0][0] = -n0[1];
  line[0][1] = n0[0];
  const RestrictedArrangement r = restrict_arrangement(ra.arr, line);
  const std::vector<Int> c = chi(r.arr);
  for (long long t : {2, 5}) CHECK(eval_poly(c, t) == t - 1);  // a single point
}

TEST_CASE("normalizer indices in symmetric groups") {
  const RootSystem a2 = build_root_system(Type::A, 2);
  const WeylGroup s3 = build_weyl(a2);
  // W_J = S2 generated by one transposition: self-normalizing.
  CHECK(normalizer_index(s3, {reflection_element(a2, a2.simple_roots[0])}) == 1);
  // trivial subgroup: index |W|.
  CHECK(normalizer_index(s3, {}) == 6);

  const RootSystem a3 = build_root_system(Type::A, 3);
  const WeylGroup s4 = build_weyl(a3);
  // S2 x S2 with disjoint supports (lambda = (2,2)): the block swap adds 2.
  CHECK(normalizer_index(
            s4, {reflection_element(a3, a3.simple_roots[0]),
                 reflection_element(a3, a3.simple_roots[2])}) == 2);
}

TEST_CASE("restricted-lattice identity on A2") {
  const RootSystem rs = build_root_system(Type::A, 2);
  const ExtendedDiagram ext = marks(rs);
  const WeylGroup w = build_weyl(rs);
  const GenusClassification g = classify_genera(rs, ext, nullptr);
  for (const GenusClass& cls : g.classes) {
    REQUIRE(cls.parabolic_j.has_value());
    const IdentityCheck check = sommers_identity_check(cls, rs, ext, w, 5);
    CHECK(check.ok);
    if (cls.label.partition == std::vector<int>{1, 1, 1}) CHECK(check.lhs == Rat(6));
    if (cls.label.partition == std::vector<int>{2, 1}) CHECK(check.lhs == Rat(12));
    if (cls.label.partition == std::vector<int>{3}) CHECK(check.lhs == Rat(3));
  }
}

TEST_CASE("type A restricted characteristic polynomial closed form") {
  CHECK(orlik_solomon_typeA_check({1, 1, 1}, 3, 5).ok);
  CHECK(orlik_solomon_typeA_check({1, 1, 1}, 3, 5).rhs == Rat(2));
  CHECK(orlik_solomon_typeA_check({2, 1}, 3, 5).rhs == Rat(4));
  CHECK(orlik_solomon_typeA_check({2, 1}, 3, 5).ok);
  CHECK(orlik_solomon_typeA_check({2, 2}, 4, 5).ok);
  CHECK(orlik_solomon_typeA_check({2, 2, 1}, 5, 7).ok);
}
