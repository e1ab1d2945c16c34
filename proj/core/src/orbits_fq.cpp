#include "orbitlab/orbits_fq.hpp"

#include <algorithm>
#include <numeric>

namespace orbitlab {

namespace {

// Multiplicity partition of a sorted value multiset.
std::vector<int> multiplicity_partition(const std::vector<long long>& sorted_values) {
  std::vector<int> parts;
  size_t i = 0;
  while (i < sorted_values.size()) {
    size_t j = i;
    while (j < sorted_values.size() && sorted_values[j] == sorted_values[i]) ++j;
    parts.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Visit all multisets of n values from {0..q-1} (nondecreasing tuples).
template <typename Fn>
void for_each_multiset(int n, long long q, Fn&& fn) {
  std::vector<long long> vals(n, 0);
  for (;;) {
    fn(vals);
    int i = n - 1;
    while (i >= 0 && vals[i] == q - 1) --i;
    if (i < 0) break;
    ++vals[i];
    for (int j = i + 1; j < n; ++j) vals[j] = vals[i];
  }
}

}  // namespace

OrbitCensus typeA_split_orbit_census(int n, long long q, const Int& cap) {
  if (!is_prime(q)) throw std::invalid_argument("typeA_split_orbit_census: q must be prime");
  if (n % q == 0)
    throw std::invalid_argument("typeA_split_orbit_census: q divides n (q not regular)");
  if (binomial(Int(q + n - 1), n) > cap)
    throw CapExceededError("typeA_split_orbit_census: multiset count exceeds cap");
  OrbitCensus census;
  for_each_multiset(n, q, [&](const std::vector<long long>& roots) {
    long long sum = 0;
    for (long long r : roots) sum = (sum + r) % q;
    if (sum != 0) return;
    census.by_partition[multiplicity_partition(roots)] += 1;
    census.total += 1;
  });
  std::vector<int> all_distinct(n, 1);
  auto it = census.by_partition.find(all_distinct);
  census.regular = it == census.by_partition.end() ? Int(0) : it->second;
  return census;
}

Int typeA_unrestricted_count(int n, long long q, const std::vector<int>& lambda, const Int& cap) {
  if (binomial(Int(q + n - 1), n) > cap)
    throw CapExceededError("typeA_unrestricted_count: multiset count exceeds cap");
  std::vector<int> sorted_lambda = lambda;
  std::sort(sorted_lambda.rbegin(), sorted_lambda.rend());
  Int count = 0;
  for_each_multiset(n, q, [&](const std::vector<long long>& roots) {
    if (multiplicity_partition(roots) == sorted_lambda) ++count;
  });
  return count;
}

Int typeA_genus_closed_form(const std::vector<int>& lambda, const Int& q) {
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  int sum_r = 0;
  Int denom = 1;
  for (const auto& [part, r] : mult) {
    sum_r += r;
    denom *= factorial(r);
  }
  const Int num = falling_factorial(q - 1, sum_r - 1);
  if (num % denom != 0)
    throw std::logic_error("type A closed form is not an integer");
  return num / denom;
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

std::vector<long long> decode_point(long long idx, int n, long long q) {
  std::vector<long long> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = idx % q;
    idx /= q;
  }
  return x;
}

long long encode_point(const std::vector<long long>& x, long long q) {
  long long idx = 0;
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) idx = idx * q + x[i];
  return idx;
}

std::vector<long long> act_mod_q(const WeylElement& w, const std::vector<long long>& x,
                                 long long q) {
  std::vector<long long> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    long long v = w.sign[i] > 0 ? x[i] : (q - x[i]) % q;
    y[w.perm[i]] = v;
  }
  return y;
}

}  // namespace

StabilizerGenus stabilizer_genus(const std::vector<long long>& point, const WeylGroup& w,
                                 const RootSystem& rs, long long q) {
  StabilizerGenus out;
  std::vector<WeylElement> vanishing_reflections;
  for (const VecI& alpha : rs.positive_roots) {
    long long pairing = 0;
    for (size_t i = 0; i < point.size(); ++i)
      pairing += static_cast<long long>(alpha[i]) * point[i];
    pairing %= q;
    if (pairing < 0) pairing += q;
    if (pairing != 0) continue;
    out.vanishing_subsystem.push_back(alpha);
    VecI neg = alpha;
    for (auto& v : neg) v = -v;
    out.vanishing_subsystem.push_back(neg);
    vanishing_reflections.push_back(reflection_element(rs, alpha));
  }
  out.scan_order = 0;
  for (const WeylElement& g : w.elements)
    if (act_mod_q(g, point, q) == point) ++out.scan_order;
  out.generated_order = vanishing_reflections.empty()
                            ? Int(1)
                            : Int(generate_subgroup(vanishing_reflections, w.n).size());
  out.agree = out.scan_order == out.generated_order;
  return out;
}

OrbitCensus toral_orbit_census(const RootSystem& rs, const WeylGroup& w, long long q,
                               const Int& cap) {
  if (!is_prime(q) || q == 2)
    throw std::invalid_argument("toral_orbit_census: q must be an odd prime");
  const int n = rs.ambient;
  Int space = 1;
  for (int i = 0; i < n; ++i) space *= q;
  if (space > cap) throw CapExceededError("toral_orbit_census: q^n exceeds enumeration cap");
  const long long total_points = static_cast<long long>(space);

  std::vector<int> parent(total_points);
  std::iota(parent.begin(), parent.end(), 0);
  for (const WeylElement& s : simple_reflections(rs)) {
    for (long long idx = 0; idx < total_points; ++idx) {
      const long long img = encode_point(act_mod_q(s, decode_point(idx, n, q), q), q);
      const int a = find_root(parent, static_cast<int>(idx));
      const int b = find_root(parent, static_cast<int>(img));
      if (a != b) parent[a] = b;
    }
  }

  OrbitCensus census;
  std::map<std::string, std::string> canonical_cache;
  for (long long idx = 0; idx < total_points; ++idx) {
    if (find_root(parent, static_cast<int>(idx)) != idx) continue;
    const std::vector<long long> x = decode_point(idx, n, q);
    const StabilizerGenus stab = stabilizer_genus(x, w, rs, q);
    std::vector<VecI> sub = stab.vanishing_subsystem;
    std::sort(sub.begin(), sub.end());
    std::string raw;
    for (const VecI& r : sub) {
      for (const Int& v : r) raw += v.str() + ",";
      raw += ";";
    }
    auto it = canonical_cache.find(raw);
    if (it == canonical_cache.end())
      it = canonical_cache.emplace(raw, canonical_subsystem_key(sub, w)).first;
    const std::string& key = it->second;
    census.by_key[key] += 1;
    if (!census.key_display.count(key))
      census.key_display[key] = classify_subsystem(sub, rs).display;
    census.total += 1;
    if (sub.empty()) census.regular += 1;
  }
  return census;
}

}  // namespace orbitlab
