#include "orbitlab/linalg.hpp"

#include <cassert>
#include <cstdlib>

namespace orbitlab {

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t lead = 0;
  for (size_t c = 0; c < cols && lead < rows; ++c) {
    size_t piv = lead;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[lead]);
    const Rat inv = Rat(1) / m[lead][c];
    for (size_t j = c; j < cols; ++j) m[lead][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == lead || m[i][c] == 0) continue;
      const Rat factor = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[lead][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++lead;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Rat det(Mat m) {
  const size_t n = m.size();
  Rat result = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      result = -result;
    }
    result *= m[c][c];
    const Rat inv = Rat(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rat factor = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return result;
}

std::optional<Vec> solve(Mat a, Vec b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref(a);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  Vec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

Mat kernel(Mat a) {
  const size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(Mat m) {
  const size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rat(0));
    m[i][n + i] = 1;
  }
  std::vector<int> pivots = rref(m);
  if (pivots.size() != n) throw std::logic_error("inverse of singular matrix");
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  Mat out(rows, Vec(cols, Rat(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Mat row_space_basis(Mat m) {
  const size_t r = rref(m).size();
  m.resize(r);
  return m;
}

bool in_row_space(const Mat& rref_basis, Vec v) {
  // Reduce v against the RREF rows; membership iff it reduces to zero.
  for (const Vec& row : rref_basis) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] == 0) continue;
    const Rat factor = v[lead];  // row has a leading 1
    for (size_t j = lead; j < v.size(); ++j) v[j] -= factor * row[j];
  }
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

int rank_mod_p(MatI m, long long p) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) {
      x %= p;
      if (x < 0) x += p;
    }
  int rk = 0;
  for (size_t c = 0; c < cols && rk < static_cast<int>(rows); ++c) {
    size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    // Modular inverse via Fermat.
    Int inv = 1, base = m[rk][c], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (size_t j = c; j < cols; ++j) m[rk][j] = m[rk][j] * inv % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == static_cast<size_t>(rk) || m[i][c] == 0) continue;
      const Int factor = m[i][c];
      for (size_t j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] - factor * m[rk][j]) % p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    ++rk;
  }
  return rk;
}

MatI hnf_rows(MatI m) {
  const size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    // Euclidean elimination in column c using rows c..n-1.
    for (;;) {
      size_t best = c;
      bool nonzero_below = false;
      for (size_t i = c; i < n; ++i) {
        if (m[i][c] == 0) continue;
        if (!nonzero_below || abs(m[i][c]) < abs(m[best][c])) best = i;
        nonzero_below = true;
      }
      if (!nonzero_below) throw std::logic_error("hnf_rows: singular matrix");
      std::swap(m[best], m[c]);
      bool done = true;
      for (size_t i = c + 1; i < n; ++i) {
        if (m[i][c] == 0) continue;
        const Int q = m[i][c] / m[c][c];
        for (size_t j = 0; j < n; ++j) m[i][j] -= q * m[c][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[c][c] < 0)
      for (size_t j = 0; j < n; ++j) m[c][j] = -m[c][j];
  }
  return m;
}

std::vector<Int> snf_diagonal(MatI m) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero entry in the remaining block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[pi], m[t]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Int q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Int q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) std::swap(m[i][j], m[i][t]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  // Enforce the divisibility chain: SNF of diag(a,b) is diag(gcd, lcm).
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      const Int g = gcd(diag[i], diag[j]);
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  return diag;
}

}  // namespace orbitlab
