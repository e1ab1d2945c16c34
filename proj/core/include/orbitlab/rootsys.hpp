#pragma once

// Classical irreducible root systems in their standard Euclidean
// realizations, with affine-diagram marks, lattice data, exponents and the
// bad/regular prime predicates.
//
// Realizations (all with exact integer coordinates):
//   A_{n-1}:  { e_i - e_j }            in the sum-zero subspace of Q^n
//   B_n:      { +-e_i +- e_j, +-e_i }
//   C_n:      { +-e_i +- e_j, +-2e_i }
//   D_n:      { +-e_i +- e_j }

#include "orbitlab/linalg.hpp"

#include <set>
#include <vector>

namespace orbitlab {

enum class Type { A, B, C, D };

std::string type_name(Type t);
Type type_from_string(const std::string& s);

struct RootSystem {
  Type type;
  int rank;          // intrinsic rank r
  int ambient;       // ambient coordinate dimension (r+1 for type A, r otherwise)
  std::vector<VecI> simple_roots;
  std::vector<VecI> positive_roots;
  std::vector<VecI> coroots;       // coroots of the positive roots, same order
  VecI highest_root;
  Int weyl_order;
};

// The affine diagram: node 0 is alpha_0 = -theta, nodes 1..r are the simple
// roots. Marks c satisfy sum_i c_i * node_root_i = 0 with c_0 = 1.
struct ExtendedDiagram {
  std::vector<VecI> node_roots;
  std::vector<Int> marks;
  std::vector<std::vector<bool>> adjacent;
};

struct LatticeData {
  Mat coroot_basis;      // rows: simple coroots (basis of L)
  Mat coweight_basis;    // rows: fundamental coweights (basis of L-hat)
  Int connection_index;  // f = [L-hat : L]
};

RootSystem build_root_system(Type type, int rank);

ExtendedDiagram marks(const RootSystem& rs);

LatticeData connection_index(const RootSystem& rs);

// Primes dividing some coefficient of some positive root in the
// simple-root basis.
std::set<long long> bad_primes(const RootSystem& rs);

// True iff the matroid of the roots, viewed as integer functionals on the
// coroot lattice (the Cartan pairings <alpha, coroot_j>), is unchanged on
// reduction mod p. Decided by scanning
// rationally independent subsets; throws UndecidedError above `rank_cap`.
bool is_regular_prime(const RootSystem& rs, long long p, int rank_cap = 6);

// Same question, falling back to the closed-form answer table above the cap
// (type A: p regular iff p does not divide n; B/C/D: iff p is odd).
bool is_regular_prime_cached(const RootSystem& rs, long long p, int rank_cap = 6);

std::vector<int> exponents(const RootSystem& rs);

// Integer inner product of two coordinate vectors.
Int idot(const VecI& a, const VecI& b);

// Reflection of v in the hyperplane orthogonal to root alpha.
VecI reflect(const VecI& v, const VecI& alpha);

}  // namespace orbitlab
