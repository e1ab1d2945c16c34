#pragma once

// Hyperplane arrangements, their intersection lattices with Moebius values
// and characteristic polynomials, restricted lattices L^X, and the identity
// sum_{S: W_S ~ W_J} p(S,t) = f / [N_W(W_J):W_J] * chi(L^X, t).

#include "orbitlab/genus.hpp"

#include <string>
#include <vector>

namespace orbitlab {

// An arrangement in coordinates of its ambient space (dimension dim).
struct Arrangement {
  int dim;
  std::vector<Vec> normals;
};

struct IntersectionLattice {
  int ambient_dim;
  std::vector<Mat> elements;   // RREF row bases; index 0 is the ambient space
  std::vector<int> dims;
  std::vector<Int> moebius;    // mu(V, X)
};

IntersectionLattice build_intersection_lattice(const Arrangement& arr);

// Coefficients of chi(L,t) = sum_X mu(V,X) t^{dim X}, indexed by degree.
std::vector<Int> char_poly(const IntersectionLattice& lattice);

Int eval_poly(const std::vector<Int>& coeffs, const Int& t);

// The reflection arrangement of rs in intrinsic coordinates, together with
// the basis (rows, ambient coordinates) identifying those coordinates.
struct ReflectionArrangement {
  Arrangement arr;
  Mat coordinate_basis;
  // Intrinsic normal of an ambient root vector.
  Vec normal_of_root(const VecI& alpha) const;
};

ReflectionArrangement reflection_arrangement(const RootSystem& rs);

// The restriction of arr to a subspace X (given as rows of intrinsic
// coordinates): hyperplanes not containing X, intersected with X, in
// coordinates of X. Returns the arrangement plus the basis of X used.
struct RestrictedArrangement {
  Arrangement arr;
  Mat x_basis;  // rows, intrinsic coordinates of the parent
};

RestrictedArrangement restrict_arrangement(const Arrangement& arr, const Mat& x_basis_rows);

// [N_W(W_J) : W_J] for the subgroup generated by `generators` inside w.
Int normalizer_index(const WeylGroup& w, const std::vector<WeylElement>& generators);

struct IdentityCheck {
  Rat lhs;
  Rat rhs;
  bool ok;
};

// Both sides of the restricted-characteristic-polynomial identity for a
// genus class realizable as a parabolic, at integer t.
IdentityCheck sommers_identity_check(const GenusClass& cls, const RootSystem& rs,
                                     const ExtendedDiagram& ext, const WeylGroup& w,
                                     const Int& t);

// Type A only: chi(L^X,q) / [N_W(W_J):W_J] against the closed form
// (q-1)...(q - sum r_i + 1) / prod r_i! for lambda |- n.
IdentityCheck orlik_solomon_typeA_check(const std::vector<int>& lambda, int n, const Int& q);

}  // namespace orbitlab
