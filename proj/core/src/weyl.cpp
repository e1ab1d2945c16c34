#include "orbitlab/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace orbitlab {

WeylElement identity_element(int n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(n, 1);
  return w;
}

WeylElement compose(const WeylElement& u, const WeylElement& w) {
  const int n = static_cast<int>(w.perm.size());
  WeylElement out;
  out.perm.resize(n);
  out.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    out.perm[i] = u.perm[w.perm[i]];
    out.sign[i] = static_cast<int8_t>(w.sign[i] * u.sign[w.perm[i]]);
  }
  return out;
}

WeylElement inverse(const WeylElement& w) {
  const int n = static_cast<int>(w.perm.size());
  WeylElement out;
  out.perm.resize(n);
  out.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    out.perm[w.perm[i]] = static_cast<uint8_t>(i);
    out.sign[w.perm[i]] = w.sign[i];
  }
  return out;
}

VecI apply(const WeylElement& w, const VecI& v) {
  VecI out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[w.perm[i]] = w.sign[i] * v[i];
  return out;
}

Vec apply(const WeylElement& w, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[w.perm[i]] = Rat(w.sign[i]) * v[i];
  return out;
}

WeylGroup build_weyl(const RootSystem& rs, const Int& cap) {
  if (rs.weyl_order > cap)
    throw CapExceededError("build_weyl: |W| exceeds enumeration cap");
  WeylGroup g;
  g.type = rs.type;
  g.rank = rs.rank;
  g.n = rs.ambient;
  g.order = rs.weyl_order;
  const int n = rs.ambient;
  std::vector<uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (rs.type == Type::A) {
      WeylElement w;
      w.perm = perm;
      w.sign.assign(n, 1);
      g.elements.push_back(std::move(w));
      continue;
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (rs.type == Type::D && (std::popcount(mask) % 2) != 0) continue;
      WeylElement w;
      w.perm = perm;
      w.sign.resize(n);
      for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
      g.elements.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (Int(g.elements.size()) != g.order)
    throw std::logic_error("build_weyl: enumeration does not match closed-form order");
  return g;
}

WeylElement reflection_element(const RootSystem& rs, const VecI& alpha) {
  const int n = rs.ambient;
  WeylElement w;
  w.perm.resize(n);
  w.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    VecI e(n, 0);
    e[i] = 1;
    const VecI img = reflect(e, alpha);
    int j = -1;
    Int s = 0;
    for (int k = 0; k < n; ++k) {
      if (img[k] == 0) continue;
      if (j != -1) throw std::logic_error("reflection is not a signed permutation");
      j = k;
      s = img[k];
    }
    if (j == -1 || (s != 1 && s != -1))
      throw std::logic_error("reflection is not a signed permutation");
    w.perm[i] = static_cast<uint8_t>(j);
    w.sign[i] = static_cast<int8_t>(s == 1 ? 1 : -1);
  }
  return w;
}

std::vector<WeylElement> simple_reflections(const RootSystem& rs) {
  std::vector<WeylElement> out;
  for (const VecI& alpha : rs.simple_roots) out.push_back(reflection_element(rs, alpha));
  return out;
}

int dim_fix(const WeylElement& w, const RootSystem& rs) {
  // A cycle of the underlying permutation contributes a fixed vector iff the
  // product of signs around it is +1. For type A this counts all cycles, and
  // the restriction to the sum-zero subspace removes one dimension.
  const int n = static_cast<int>(w.perm.size());
  std::vector<bool> seen(n, false);
  int positive_cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int s = 1, j = i;
    do {
      seen[j] = true;
      s *= w.sign[j];
      j = w.perm[j];
    } while (j != i);
    if (s == 1) ++positive_cycles;
  }
  return rs.type == Type::A ? positive_cycles - 1 : positive_cycles;
}

int sgn(const WeylElement& w, const RootSystem& rs) {
  const int n = static_cast<int>(w.perm.size());
  // Permutation parity by cycle count.
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = w.perm[j]) seen[j] = true;
  }
  int s = ((n - cycles) % 2 == 0) ? 1 : -1;
  if (rs.type != Type::A)
    for (int i = 0; i < n; ++i) s *= w.sign[i];
  return s;
}

Int shephard_todd_sum(const WeylGroup& w, const RootSystem& rs, const Int& q) {
  Int s = 0;
  for (const WeylElement& g : w.elements) s += pow(q, dim_fix(g, rs));
  return s;
}

Int signed_shephard_todd_sum(const WeylGroup& w, const RootSystem& rs, const Int& q) {
  Int s = 0;
  for (const WeylElement& g : w.elements) s += sgn(g, rs) * pow(q, dim_fix(g, rs));
  return s;
}

std::vector<WeylElement> generate_subgroup(const std::vector<WeylElement>& generators, int n) {
  std::set<WeylElement> seen;
  std::vector<WeylElement> queue{identity_element(n)};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    const WeylElement cur = queue[head];
    for (const WeylElement& g : generators) {
      WeylElement next = compose(g, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

LatticeQuotient build_lattice_quotient(const RootSystem& rs, const Int& q, const Int& cap) {
  const LatticeData ld = connection_index(rs);
  LatticeQuotient lq;
  lq.rank = rs.rank;
  lq.q = q;
  lq.f = ld.connection_index;
  lq.size = lq.f * pow(q, rs.rank);
  if (lq.size > cap)
    throw CapExceededError("build_lattice_quotient: f*q^r exceeds enumeration cap");
  lq.coweight_basis = ld.coweight_basis;

  // L in coweight coordinates: simple coroot i = sum_j C[i][j] coweight_j.
  MatI c(rs.rank, VecI(rs.rank));
  for (int i = 0; i < rs.rank; ++i) {
    // Solve row_i(coroot) = x * coweight_basis.
    Mat a(rs.ambient, Vec(rs.rank));
    Vec b(rs.ambient);
    for (int col = 0; col < rs.rank; ++col)
      for (int k = 0; k < rs.ambient; ++k) a[k][col] = ld.coweight_basis[col][k];
    for (int k = 0; k < rs.ambient; ++k) b[k] = ld.coroot_basis[i][k];
    auto x = solve(a, b);
    if (!x) throw std::logic_error("coroot not in coweight lattice span");
    for (int j = 0; j < rs.rank; ++j) c[i][j] = to_int((*x)[j]);
  }
  for (auto& row : c)
    for (auto& e : row) e *= q;
  lq.hnf = hnf_rows(std::move(c));

  // Representatives: the box prod [0, hnf[i][i]).
  VecI x(rs.rank, 0);
  for (;;) {
    lq.reps.push_back(x);
    int i = rs.rank - 1;
    while (i >= 0) {
      x[i] += 1;
      if (x[i] < lq.hnf[i][i]) break;
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  if (Int(lq.reps.size()) != lq.size)
    throw std::logic_error("quotient size mismatch");
  return lq;
}

MatI quotient_action_matrix(const LatticeQuotient& lq, const WeylElement& w,
                            const RootSystem& rs) {
  const int r = lq.rank;
  const int n = rs.ambient;
  MatI c(r, VecI(r));
  for (int i = 0; i < r; ++i) {
    Vec img(n);
    for (int k = 0; k < n; ++k) img[k] = lq.coweight_basis[i][k];
    img = orbitlab::apply(w, img);
    Mat a(n, Vec(r));
    for (int col = 0; col < r; ++col)
      for (int k = 0; k < n; ++k) a[k][col] = lq.coweight_basis[col][k];
    auto x = solve(a, img);
    if (!x) throw std::logic_error("W does not preserve the coweight lattice span");
    for (int j = 0; j < r; ++j) c[i][j] = to_int((*x)[j]);
  }
  return c;
}

VecI quotient_reduce(const LatticeQuotient& lq, VecI x) {
  const int r = lq.rank;
  for (int i = 0; i < r; ++i) {
    const Int d = lq.hnf[i][i];
    Int k = x[i] / d;
    if (x[i] - k * d < 0) k -= 1;  // floor division
    if (k == 0) continue;
    for (int j = i; j < r; ++j) x[j] -= k * lq.hnf[i][j];
  }
  return x;
}

VecI quotient_apply(const LatticeQuotient& lq, const MatI& action, const VecI& x) {
  const int r = lq.rank;
  VecI y(r, 0);
  for (int i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < r; ++j) y[j] += action[i][j] * x[i];
  }
  return quotient_reduce(lq, std::move(y));
}

Int fixed_points(const LatticeQuotient& lq, const WeylElement& w, const RootSystem& rs) {
  const MatI action = quotient_action_matrix(lq, w, rs);
  Int count = 0;
  for (const VecI& x : lq.reps)
    if (quotient_apply(lq, action, x) == x) ++count;
  return count;
}

Int burnside_orbit_count(const LatticeQuotient& lq, const WeylGroup& w, const RootSystem& rs) {
  Int total = 0;
  for (const WeylElement& g : w.elements) total += fixed_points(lq, g, rs);
  if (total % w.order != 0)
    throw std::logic_error("Burnside sum not divisible by |W|");
  return total / w.order;
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

Int orbit_count_unionfind(const LatticeQuotient& lq, const RootSystem& rs) {
  std::map<VecI, int> index;
  for (size_t i = 0; i < lq.reps.size(); ++i) index[lq.reps[i]] = static_cast<int>(i);
  std::vector<int> parent(lq.reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const WeylElement& s : simple_reflections(rs)) {
    const MatI action = quotient_action_matrix(lq, s, rs);
    for (size_t i = 0; i < lq.reps.size(); ++i) {
      const VecI img = quotient_apply(lq, action, lq.reps[i]);
      const int a = find_root(parent, static_cast<int>(i));
      const int b = find_root(parent, index.at(img));
      if (a != b) parent[a] = b;
    }
  }
  Int orbits = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (find_root(parent, static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
  return orbits;
}

Int sgn_inner_product(const LatticeQuotient& lq, const WeylGroup& w, const RootSystem& rs) {
  Int total = 0;
  for (const WeylElement& g : w.elements) total += sgn(g, rs) * fixed_points(lq, g, rs);
  if (total % w.order != 0)
    throw std::logic_error("sgn inner product not divisible by |W|");
  return total / w.order;
}

}  // namespace orbitlab
