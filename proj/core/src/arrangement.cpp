#include "orbitlab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orbitlab {

namespace {

std::string serialize_mat(const Mat& m) {
  std::ostringstream os;
  for (const Vec& row : m) {
    for (const Rat& x : row) os << x << ',';
    os << ';';
  }
  return os.str();
}

// Basis rows of X intersected with the hyperplane of normal h; empty optional
// when X is contained in the hyperplane.
std::optional<Mat> intersect_with_hyperplane(const Mat& x_basis, const Vec& h) {
  Vec constraint(x_basis.size());
  bool contained = true;
  for (size_t i = 0; i < x_basis.size(); ++i) {
    constraint[i] = dot(x_basis[i], h);
    if (constraint[i] != 0) contained = false;
  }
  if (contained) return std::nullopt;
  const Mat coeffs = kernel(Mat{constraint});
  Mat result;
  for (const Vec& c : coeffs) {
    Vec v(x_basis.empty() ? 0 : x_basis[0].size(), Rat(0));
    for (size_t i = 0; i < x_basis.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j) v[j] += c[i] * x_basis[i][j];
    result.push_back(std::move(v));
  }
  return row_space_basis(std::move(result));
}

bool subspace_contains(const Mat& big_rref, const Mat& small_rows) {
  for (const Vec& row : small_rows)
    if (!in_row_space(big_rref, row)) return false;
  return true;
}

}  // namespace

IntersectionLattice build_intersection_lattice(const Arrangement& arr) {
  IntersectionLattice lat;
  lat.ambient_dim = arr.dim;
  Mat ambient(arr.dim, Vec(arr.dim, Rat(0)));
  for (int i = 0; i < arr.dim; ++i) ambient[i][i] = 1;
  std::map<std::string, int> index;
  lat.elements.push_back(ambient);
  index[serialize_mat(ambient)] = 0;

  for (size_t head = 0; head < lat.elements.size(); ++head) {
    const Mat current = lat.elements[head];
    for (const Vec& h : arr.normals) {
      auto cut = intersect_with_hyperplane(current, h);
      if (!cut) continue;
      const std::string key = serialize_mat(*cut);
      if (index.emplace(key, static_cast<int>(lat.elements.size())).second)
        lat.elements.push_back(std::move(*cut));
    }
  }
  for (const Mat& x : lat.elements) lat.dims.push_back(static_cast<int>(x.size()));

  // mu(V,X) = -sum over Z strictly containing X of mu(V,Z), seeded mu(V,V)=1.
  std::vector<int> order(lat.elements.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lat.dims[a] > lat.dims[b]; });
  lat.moebius.assign(lat.elements.size(), 0);
  for (int idx : order) {
    if (idx == 0) {
      lat.moebius[0] = 1;
      continue;
    }
    Int acc = 0;
    for (size_t z = 0; z < lat.elements.size(); ++z) {
      if (static_cast<int>(z) == idx || lat.dims[z] <= lat.dims[idx]) continue;
      if (subspace_contains(lat.elements[z], lat.elements[idx])) acc += lat.moebius[z];
    }
    lat.moebius[idx] = -acc;
  }
  return lat;
}

std::vector<Int> char_poly(const IntersectionLattice& lattice) {
  std::vector<Int> coeffs(lattice.ambient_dim + 1, 0);
  for (size_t i = 0; i < lattice.elements.size(); ++i)
    coeffs[lattice.dims[i]] += lattice.moebius[i];
  return coeffs;
}

Int eval_poly(const std::vector<Int>& coeffs, const Int& t) {
  Int acc = 0;
  for (size_t d = coeffs.size(); d-- > 0;) acc = acc * t + coeffs[d];
  return acc;
}

Vec ReflectionArrangement::normal_of_root(const VecI& alpha) const {
  Vec n(coordinate_basis.size());
  for (size_t i = 0; i < coordinate_basis.size(); ++i) {
    Rat s = 0;
    for (size_t k = 0; k < alpha.size(); ++k) s += coordinate_basis[i][k] * Rat(alpha[k]);
    n[i] = s;
  }
  return n;
}

ReflectionArrangement reflection_arrangement(const RootSystem& rs) {
  ReflectionArrangement ra;
  if (rs.type == Type::A) {
    for (const VecI& alpha : rs.simple_roots) {
      Vec row(rs.ambient);
      for (int k = 0; k < rs.ambient; ++k) row[k] = Rat(alpha[k]);
      ra.coordinate_basis.push_back(std::move(row));
    }
  } else {
    ra.coordinate_basis.assign(rs.rank, Vec(rs.rank, Rat(0)));
    for (int i = 0; i < rs.rank; ++i) ra.coordinate_basis[i][i] = 1;
  }
  ra.arr.dim = rs.rank;
  for (const VecI& alpha : rs.positive_roots) ra.arr.normals.push_back(ra.normal_of_root(alpha));
  return ra;
}

RestrictedArrangement restrict_arrangement(const Arrangement& arr, const Mat& x_basis_rows) {
  RestrictedArrangement out;
  out.x_basis = row_space_basis(x_basis_rows);
  out.arr.dim = static_cast<int>(out.x_basis.size());
  std::set<Vec> seen;
  for (const Vec& h : arr.normals) {
    Vec restricted(out.x_basis.size());
    bool contained = true;
    for (size_t i = 0; i < out.x_basis.size(); ++i) {
      restricted[i] = dot(out.x_basis[i], h);
      if (restricted[i] != 0) contained = false;
    }
    if (contained) continue;  // hyperplane contains X
    // Normalize so distinct hyperplanes with equal trace on X coincide.
    Rat lead = 0;
    for (const Rat& x : restricted)
      if (x != 0) {
        lead = x;
        break;
      }
    for (Rat& x : restricted) x /= lead;
    if (seen.insert(restricted).second) out.arr.normals.push_back(std::move(restricted));
  }
  return out;
}

Int normalizer_index(const WeylGroup& w, const std::vector<WeylElement>& generators) {
  const std::vector<WeylElement> subgroup = generate_subgroup(generators, w.n);
  const std::set<WeylElement> members(subgroup.begin(), subgroup.end());
  Int normalizer_order = 0;
  for (const WeylElement& g : w.elements) {
    const WeylElement g_inv = inverse(g);
    bool normalizes = true;
    for (const WeylElement& gen : generators)
      if (!members.count(compose(compose(g, gen), g_inv))) {
        normalizes = false;
        break;
      }
    if (normalizes) ++normalizer_order;
  }
  const Int sub_order = Int(subgroup.size());
  if (normalizer_order % sub_order != 0)
    throw std::logic_error("normalizer order not divisible by subgroup order");
  return normalizer_order / sub_order;
}

IdentityCheck sommers_identity_check(const GenusClass& cls, const RootSystem& rs,
                                     const ExtendedDiagram& ext, const WeylGroup& w,
                                     const Int& t) {
  if (!cls.parabolic_j)
    throw std::invalid_argument("sommers_identity_check: class has no parabolic representative");
  Int lhs = 0;
  for (SubsetBits s : cls.subsets) lhs += p_of(s, ext, t);

  const ReflectionArrangement ra = reflection_arrangement(rs);
  std::vector<VecI> j_roots;
  std::vector<WeylElement> j_gens;
  for (int i = 1; i <= rs.rank; ++i)
    if (*cls.parabolic_j & (1u << i)) {
      j_roots.push_back(ext.node_roots[i]);
      j_gens.push_back(reflection_element(rs, ext.node_roots[i]));
    }
  // Fixed space of W_J in intrinsic coordinates.
  Mat constraints;
  for (const VecI& alpha : j_roots) constraints.push_back(ra.normal_of_root(alpha));
  Mat x_basis;
  if (constraints.empty()) {
    x_basis.assign(rs.rank, Vec(rs.rank, Rat(0)));
    for (int i = 0; i < rs.rank; ++i) x_basis[i][i] = 1;
  } else {
    x_basis = kernel(constraints);
  }
  const RestrictedArrangement restricted = restrict_arrangement(ra.arr, x_basis);
  const Int chi = eval_poly(char_poly(build_intersection_lattice(restricted.arr)), t);
  const Int f = connection_index(rs).connection_index;
  const Int index = normalizer_index(w, j_gens);
  IdentityCheck check;
  check.lhs = Rat(lhs);
  check.rhs = Rat(f * chi, index);
  check.ok = check.lhs == check.rhs;
  return check;
}

IdentityCheck orlik_solomon_typeA_check(const std::vector<int>& lambda, int n, const Int& q) {
  const RootSystem rs = build_root_system(Type::A, n - 1);
  const ExtendedDiagram ext = marks(rs);
  const WeylGroup w = build_weyl(rs);
  const ReflectionArrangement ra = reflection_arrangement(rs);

  std::vector<WeylElement> j_gens;
  Mat constraints;
  int pos = 0;
  for (int part : lambda) {
    for (int i = 0; i < part - 1; ++i) {
      const VecI& alpha = rs.simple_roots[pos + i];
      j_gens.push_back(reflection_element(rs, alpha));
      constraints.push_back(ra.normal_of_root(alpha));
    }
    pos += part;
  }
  Mat x_basis;
  if (constraints.empty()) {
    x_basis.assign(rs.rank, Vec(rs.rank, Rat(0)));
    for (int i = 0; i < rs.rank; ++i) x_basis[i][i] = 1;
  } else {
    x_basis = kernel(constraints);
  }
  const RestrictedArrangement restricted = restrict_arrangement(ra.arr, x_basis);
  const Int chi = eval_poly(char_poly(build_intersection_lattice(restricted.arr)), q);
  const Int index = normalizer_index(w, j_gens);

  // (q-1)(q-2)...(q - sum r_i + 1) / prod r_i!
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  int sum_r = 0;
  Int denom = 1;
  for (const auto& [part, r] : mult) {
    sum_r += r;
    denom *= factorial(r);
  }
  IdentityCheck check;
  check.lhs = Rat(chi, index);
  check.rhs = Rat(falling_factorial(q - 1, sum_r - 1), denom);
  check.ok = check.lhs == check.rhs;
  return check;
}

}  // namespace orbitlab
