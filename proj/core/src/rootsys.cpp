#include "orbitlab/rootsys.hpp"

#include <algorithm>
#include <functional>

namespace orbitlab {

std::string type_name(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
  }
  return "?";
}

Type type_from_string(const std::string& s) {
  if (s == "A") return Type::A;
  if (s == "B") return Type::B;
  if (s == "C") return Type::C;
  if (s == "D") return Type::D;
  throw UnsupportedError("unsupported root system type: " + s);
}

Int idot(const VecI& a, const VecI& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecI reflect(const VecI& v, const VecI& alpha) {
  const Int num = 2 * idot(v, alpha);
  const Int den = idot(alpha, alpha);
  // <v, alpha-check> is an integer for any two roots of the same system.
  const Int c = num / den;
  VecI out = v;
  for (size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

namespace {

VecI unit(int dim, int i, Int scale = 1) {
  VecI v(dim, 0);
  v[i] = scale;
  return v;
}

VecI diff(int dim, int i, int j) {
  VecI v(dim, 0);
  v[i] = 1;
  v[j] = -1;
  return v;
}

VecI sum2(int dim, int i, int j) {
  VecI v(dim, 0);
  v[i] = 1;
  v[j] = 1;
  return v;
}

VecI coroot_of(const VecI& alpha) {
  const Int norm = idot(alpha, alpha);
  VecI v = alpha;
  for (auto& x : v) {
    const Int num = 2 * x;
    if (num % norm != 0) throw std::logic_error("non-integral coroot");
    x = num / norm;
  }
  return v;
}

}  // namespace

RootSystem build_root_system(Type type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  const int n = rank;
  switch (type) {
    case Type::A: {
      if (rank < 1) throw UnsupportedError("type A requires rank >= 1");
      rs.ambient = rank + 1;
      for (int i = 0; i < rank; ++i) rs.simple_roots.push_back(diff(rs.ambient, i, i + 1));
      for (int i = 0; i < rs.ambient; ++i)
        for (int j = i + 1; j < rs.ambient; ++j) rs.positive_roots.push_back(diff(rs.ambient, i, j));
      rs.highest_root = diff(rs.ambient, 0, rs.ambient - 1);
      rs.weyl_order = factorial(rank + 1);
      break;
    }
    case Type::B: {
      if (rank < 2) throw UnsupportedError("type B requires rank >= 2");
      rs.ambient = n;
      for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(diff(n, i, i + 1));
      rs.simple_roots.push_back(unit(n, n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          rs.positive_roots.push_back(diff(n, i, j));
          rs.positive_roots.push_back(sum2(n, i, j));
        }
      for (int i = 0; i < n; ++i) rs.positive_roots.push_back(unit(n, i));
      rs.highest_root = sum2(n, 0, 1);
      rs.weyl_order = (Int(1) << n) * factorial(n);
      break;
    }
    case Type::C: {
      if (rank < 2) throw UnsupportedError("type C requires rank >= 2");
      rs.ambient = n;
      for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(diff(n, i, i + 1));
      rs.simple_roots.push_back(unit(n, n - 1, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          rs.positive_roots.push_back(diff(n, i, j));
          rs.positive_roots.push_back(sum2(n, i, j));
        }
      for (int i = 0; i < n; ++i) rs.positive_roots.push_back(unit(n, i, 2));
      rs.highest_root = unit(n, 0, 2);
      rs.weyl_order = (Int(1) << n) * factorial(n);
      break;
    }
    case Type::D: {
      if (rank < 3) throw UnsupportedError("type D requires rank >= 3");
      rs.ambient = n;
      for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(diff(n, i, i + 1));
      rs.simple_roots.push_back(sum2(n, n - 2, n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          rs.positive_roots.push_back(diff(n, i, j));
          rs.positive_roots.push_back(sum2(n, i, j));
        }
      rs.highest_root = sum2(n, 0, 1);
      rs.weyl_order = (Int(1) << (n - 1)) * factorial(n);
      break;
    }
  }
  for (const VecI& alpha : rs.positive_roots) rs.coroots.push_back(coroot_of(alpha));
  return rs;
}

ExtendedDiagram marks(const RootSystem& rs) {
  ExtendedDiagram ext;
  VecI alpha0 = rs.highest_root;
  for (auto& x : alpha0) x = -x;
  ext.node_roots.push_back(alpha0);
  for (const VecI& s : rs.simple_roots) ext.node_roots.push_back(s);

  // theta = sum c_i alpha_i over the simple roots, solved exactly.
  Mat a(rs.ambient, Vec(rs.rank));
  Vec b(rs.ambient);
  for (int row = 0; row < rs.ambient; ++row) {
    for (int col = 0; col < rs.rank; ++col) a[row][col] = Rat(rs.simple_roots[col][row]);
    b[row] = Rat(rs.highest_root[row]);
  }
  auto sol = solve(a, b);
  if (!sol) throw std::logic_error("highest root not in simple-root span");
  ext.marks.push_back(1);
  for (const Rat& c : *sol) ext.marks.push_back(to_int(c));

  const int m = rs.rank + 1;
  ext.adjacent.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && idot(ext.node_roots[i], ext.node_roots[j]) != 0) ext.adjacent[i][j] = true;
  return ext;
}

namespace {

// Simple coroots as a rational matrix (rows).
Mat simple_coroot_mat(const RootSystem& rs) {
  Mat b(rs.rank, Vec(rs.ambient));
  for (int i = 0; i < rs.rank; ++i) {
    const VecI cr = [&] {
      const VecI& alpha = rs.simple_roots[i];
      VecI v = alpha;
      const Int norm = idot(alpha, alpha);
      for (auto& x : v) x = 2 * x / norm;
      return v;
    }();
    for (int j = 0; j < rs.ambient; ++j) b[i][j] = Rat(cr[j]);
  }
  return b;
}

// Pairing matrix M[i][j] = <simple_coroot_i, simple_root_j>.
MatI coroot_root_pairing(const RootSystem& rs) {
  const Mat b = simple_coroot_mat(rs);
  MatI m(rs.rank, VecI(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      Rat s = 0;
      for (int k = 0; k < rs.ambient; ++k) s += b[i][k] * Rat(rs.simple_roots[j][k]);
      m[i][j] = to_int(s);
    }
  return m;
}

}  // namespace

LatticeData connection_index(const RootSystem& rs) {
  LatticeData ld;
  ld.coroot_basis = simple_coroot_mat(rs);
  const MatI m = coroot_root_pairing(rs);
  Mat mr(rs.rank, Vec(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) mr[i][j] = Rat(m[i][j]);
  // Fundamental coweights: rows of M^{-1} * (coroot basis), so that
  // <coweight_k, simple_root_j> = delta_kj.
  ld.coweight_basis = mat_mul(inverse(mr), ld.coroot_basis);
  Int f = 1;
  for (const Int& d : snf_diagonal(m)) f *= d;
  ld.connection_index = f;
  return ld;
}

std::set<long long> bad_primes(const RootSystem& rs) {
  std::set<long long> out;
  Mat a(rs.ambient, Vec(rs.rank));
  for (int row = 0; row < rs.ambient; ++row)
    for (int col = 0; col < rs.rank; ++col) a[row][col] = Rat(rs.simple_roots[col][row]);
  for (const VecI& alpha : rs.positive_roots) {
    Vec b(rs.ambient);
    for (int row = 0; row < rs.ambient; ++row) b[row] = Rat(alpha[row]);
    auto coeffs = solve(a, b);
    if (!coeffs) throw std::logic_error("positive root not in simple-root span");
    for (const Rat& c : *coeffs)
      for (long long p : prime_divisors(to_int(c)))
        if (p > 1) out.insert(p);
  }
  return out;
}

namespace {

// Positive roots as integer functionals on the cocharacter lattice of the
// simply connected group, i.e. the coroot lattice: coordinates are the
// Cartan pairings row[j] = <alpha, simple_coroot_j>.
MatI root_functionals(const RootSystem& rs) {
  MatI out;
  for (const VecI& alpha : rs.positive_roots) {
    VecI row(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      const VecI& s = rs.simple_roots[j];
      const Int num = 2 * idot(alpha, s);
      const Int den = idot(s, s);
      if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
      row[j] = num / den;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

bool is_regular_prime(const RootSystem& rs, long long p, int rank_cap) {
  if (!is_prime(p)) throw std::invalid_argument("is_regular_prime: p must be prime");
  if (rs.rank > rank_cap)
    throw UndecidedError("is_regular_prime: rank above scan cap, use the cached table");
  const MatI vecs = root_functionals(rs);
  const int r = rs.rank;
  // DFS over rationally independent subsets; the matroids differ iff some
  // Q-independent subset drops rank mod p.
  bool regular = true;
  std::vector<int> chosen;
  std::function<void(size_t)> dfs = [&](size_t start) {
    if (!regular || static_cast<int>(chosen.size()) == r) return;
    for (size_t i = start; i < vecs.size() && regular; ++i) {
      chosen.push_back(static_cast<int>(i));
      Mat q_mat;
      MatI p_mat;
      for (int idx : chosen) {
        Vec row(r);
        for (int j = 0; j < r; ++j) row[j] = Rat(vecs[idx][j]);
        q_mat.push_back(std::move(row));
        p_mat.push_back(vecs[idx]);
      }
      if (rank(q_mat) == static_cast<int>(chosen.size())) {
        if (rank_mod_p(p_mat, p) != static_cast<int>(chosen.size()))
          regular = false;
        else
          dfs(i + 1);
      }
      chosen.pop_back();
    }
  };
  dfs(0);
  return regular;
}

bool is_regular_prime_cached(const RootSystem& rs, long long p, int rank_cap) {
  if (rs.rank <= rank_cap) return is_regular_prime(rs, p, rank_cap);
  if (rs.type == Type::A) return (rs.rank + 1) % p != 0;
  return p != 2;
}

std::vector<int> exponents(const RootSystem& rs) {
  std::vector<int> m;
  const int r = rs.rank;
  switch (rs.type) {
    case Type::A:
      for (int i = 1; i <= r; ++i) m.push_back(i);
      break;
    case Type::B:
    case Type::C:
      for (int i = 1; i <= r; ++i) m.push_back(2 * i - 1);
      break;
    case Type::D:
      for (int i = 1; i < r; ++i) m.push_back(2 * i - 1);
      m.push_back(r - 1);
      std::sort(m.begin(), m.end());
      break;
  }
  return m;
}

}  // namespace orbitlab
