#pragma once

// Exact linear algebra over the rationals and over prime fields, plus the
// integer normal forms (Hermite, Smith) used for lattice index computations.
// Matrices are small (rank <= 8 throughout), so plain Gaussian elimination
// with exact arithmetic is the right tool.

#include "orbitlab/numeric.hpp"

#include <optional>
#include <vector>

namespace orbitlab {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;       // row-major
using VecI = std::vector<Int>;
using MatI = std::vector<VecI>;

Rat dot(const Vec& a, const Vec& b);

// In-place reduced row echelon form. Returns the pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

Rat det(Mat m);

// Solve A x = b for x (A is rows x cols, x has cols entries).
// Returns nullopt when the system is inconsistent; when underdetermined,
// returns the solution with free variables set to zero.
std::optional<Vec> solve(Mat a, Vec b);

// Basis of { x : A x = 0 }, one kernel vector per row of the result.
Mat kernel(Mat a);

Mat inverse(Mat m);

Mat mat_mul(const Mat& a, const Mat& b);

// Canonical basis of the row space (RREF rows, zero rows dropped).
Mat row_space_basis(Mat m);

// True iff v lies in the row space of `basis` (basis must be in RREF).
bool in_row_space(const Mat& rref_basis, Vec v);

// Rank of an integer matrix over F_p.
int rank_mod_p(MatI m, long long p);

// Row-style Hermite normal form of a full-rank square integer matrix:
// row echelon with positive pivots on the diagonal.
MatI hnf_rows(MatI m);

// Diagonal of the Smith normal form (nonnegative entries).
std::vector<Int> snf_diagonal(MatI m);

}  // namespace orbitlab
