#pragma once

// Explicit classical Weyl groups as signed permutation groups, fixed-space
// dimensions, the sign character, and the permutation action on the finite
// quotient L-hat / qL used for Burnside counting.

#include "orbitlab/rootsys.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace orbitlab {

// w(e_i) = sign[i] * e_{perm[i]}. Type A elements have all signs +1;
// type D elements have an even number of -1 entries.
struct WeylElement {
  std::vector<uint8_t> perm;
  std::vector<int8_t> sign;

  bool operator==(const WeylElement& o) const = default;
  bool operator<(const WeylElement& o) const {
    return std::tie(perm, sign) < std::tie(o.perm, o.sign);
  }
};

WeylElement identity_element(int n);
WeylElement compose(const WeylElement& u, const WeylElement& w);  // u after w
WeylElement inverse(const WeylElement& w);

VecI apply(const WeylElement& w, const VecI& v);
Vec apply(const WeylElement& w, const Vec& v);

struct WeylGroup {
  Type type;
  int rank;
  int n;  // ambient coordinate count
  Int order;
  std::vector<WeylElement> elements;
};

WeylGroup build_weyl(const RootSystem& rs, const Int& cap = Int(1000000));

// The reflection in a root, as a signed permutation (valid for all roots of
// the standard classical realizations).
WeylElement reflection_element(const RootSystem& rs, const VecI& alpha);

// Simple reflections, generating set of W.
std::vector<WeylElement> simple_reflections(const RootSystem& rs);

// Dimension of the fixed space of w on the reflection representation V
// (the sum-zero subspace for type A).
int dim_fix(const WeylElement& w, const RootSystem& rs);

// Determinant of w on V; equals (-1)^(reflection length).
int sgn(const WeylElement& w, const RootSystem& rs);

Int shephard_todd_sum(const WeylGroup& w, const RootSystem& rs, const Int& q);
Int signed_shephard_todd_sum(const WeylGroup& w, const RootSystem& rs, const Int& q);

// Closure of a generating set inside W (breadth-first products).
std::vector<WeylElement> generate_subgroup(const std::vector<WeylElement>& generators, int n);

// The finite W-set L-hat / qL in coweight-basis coordinates.
struct LatticeQuotient {
  int rank;
  Int q;
  Int f;
  Int size;                      // f * q^rank
  Mat coweight_basis;            // rows, ambient coordinates
  MatI hnf;                      // row HNF of q * (L in coweight coordinates)
  std::vector<VecI> reps;        // canonical coset representatives
};

LatticeQuotient build_lattice_quotient(const RootSystem& rs, const Int& q,
                                       const Int& cap = Int(1000000));

// Integer matrix of w acting on coweight coordinates (column convention).
MatI quotient_action_matrix(const LatticeQuotient& lq, const WeylElement& w,
                            const RootSystem& rs);

VecI quotient_reduce(const LatticeQuotient& lq, VecI x);
VecI quotient_apply(const LatticeQuotient& lq, const MatI& action, const VecI& x);

Int fixed_points(const LatticeQuotient& lq, const WeylElement& w, const RootSystem& rs);

// Orbit count via Burnside's lemma (average fixed points).
Int burnside_orbit_count(const LatticeQuotient& lq, const WeylGroup& w, const RootSystem& rs);

// Orbit count via union-find over representatives, the unconditional
// ground truth.
Int orbit_count_unionfind(const LatticeQuotient& lq, const RootSystem& rs);

// (1/|W|) sum_w sgn(w) Fix(w) on the quotient.
Int sgn_inner_product(const LatticeQuotient& lq, const WeylGroup& w, const RootSystem& rs);

}  // namespace orbitlab
