#include "orbitlab/genus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orbitlab {

std::vector<SubsetBits> enumerate_proper_subsets(const ExtendedDiagram& ext) {
  const int m = static_cast<int>(ext.node_roots.size());
  std::vector<SubsetBits> out;
  const SubsetBits full = (1u << m) - 1;
  for (SubsetBits s = 0; s < full; ++s) out.push_back(s);
  return out;
}

Int p_of(SubsetBits s, const ExtendedDiagram& ext, const Int& t) {
  std::vector<long long> coins;
  Int min_sum = 0;
  for (size_t i = 0; i < ext.node_roots.size(); ++i) {
    if (s & (1u << i)) continue;
    coins.push_back(static_cast<long long>(ext.marks[i]));
    min_sum += ext.marks[i];
  }
  if (t < min_sum) return 0;
  // Strictly positive solutions = nonnegative solutions of the shifted sum.
  const long long target = static_cast<long long>(t - min_sum);
  std::vector<Int> dp(target + 1, 0);
  dp[0] = 1;
  for (long long c : coins)
    for (long long j = c; j <= target; ++j) dp[j] += dp[j - c];
  return dp[target];
}

std::vector<VecI> closure_subsystem(const std::vector<VecI>& seeds, const RootSystem& rs) {
  (void)rs;
  std::set<VecI> cur;
  for (const VecI& a : seeds) {
    cur.insert(a);
    VecI neg = a;
    for (auto& x : neg) x = -x;
    cur.insert(neg);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VecI> snapshot(cur.begin(), cur.end());
    for (const VecI& a : snapshot)
      for (const VecI& b : snapshot) {
        VecI c = reflect(b, a);
        if (cur.insert(c).second) changed = true;
      }
  }
  return {cur.begin(), cur.end()};
}

namespace {

std::string serialize_roots(std::vector<VecI> roots) {
  std::sort(roots.begin(), roots.end());
  std::ostringstream os;
  for (const VecI& r : roots) {
    for (const Int& x : r) os << x << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace

std::string canonical_subsystem_key(const std::vector<VecI>& subsystem, const WeylGroup& w) {
  if (subsystem.empty()) return "";
  std::string best;
  bool first = true;
  for (const WeylElement& g : w.elements) {
    std::vector<VecI> img;
    img.reserve(subsystem.size());
    for (const VecI& r : subsystem) img.push_back(apply(g, r));
    std::string key = serialize_roots(std::move(img));
    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  }
  return best;
}

GenusLabel classify_subsystem(const std::vector<VecI>& subsystem, const RootSystem& rs) {
  GenusLabel label;
  // Positive halves only (first nonzero coordinate positive).
  std::vector<VecI> pos;
  for (const VecI& r : subsystem) {
    for (const Int& x : r) {
      if (x == 0) continue;
      if (x > 0) pos.push_back(r);
      break;
    }
  }
  // Ambient length data.
  Int min_norm = 0, max_norm = 0;
  for (const VecI& r : rs.positive_roots) {
    const Int norm = idot(r, r);
    if (min_norm == 0 || norm < min_norm) min_norm = norm;
    if (norm > max_norm) max_norm = norm;
  }
  const bool two_lengths_ambient = min_norm != max_norm;

  // Connected components under non-orthogonality.
  const int count = static_cast<int>(pos.size());
  std::vector<int> comp(count, -1);
  int ncomp = 0;
  for (int i = 0; i < count; ++i) {
    if (comp[i] != -1) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (int j = 0; j < count; ++j)
        if (comp[j] == -1 && idot(pos[cur], pos[j]) != 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }

  for (int c = 0; c < ncomp; ++c) {
    std::vector<VecI> roots;
    for (int i = 0; i < count; ++i)
      if (comp[i] == c) roots.push_back(pos[i]);
    Mat m;
    for (const VecI& r : roots) {
      Vec row(r.size());
      for (size_t j = 0; j < r.size(); ++j) row[j] = Rat(r[j]);
      m.push_back(std::move(row));
    }
    const int k = rank(m);
    const int positives = static_cast<int>(roots.size());
    int longs = 0;
    bool mixed = false;
    for (const VecI& r : roots) {
      const Int norm = idot(r, r);
      if (norm == max_norm) ++longs;
      if (norm != idot(roots[0], roots[0])) mixed = true;
    }
    std::string family;
    if (!mixed) {
      if (positives == k * (k + 1) / 2)
        family = "A";
      else if (positives == k * (k - 1))
        family = "D";
      else
        throw UnsupportedError("subsystem component does not match a classical pattern");
      if (two_lengths_ambient)
        family += idot(roots[0], roots[0]) == max_norm ? "(l)" : "(s)";
    } else {
      if (positives != k * k)
        throw UnsupportedError("subsystem component does not match a classical pattern");
      if (k == 2)
        family = rs.type == Type::C ? "C" : "B";
      else if (longs == k * (k - 1))
        family = "B";
      else if (longs == k)
        family = "C";
      else
        throw UnsupportedError("subsystem component does not match a classical pattern");
    }
    label.components.emplace_back(family, k);
  }
  std::sort(label.components.begin(), label.components.end(),
            [](const auto& a, const auto& b) {
              return std::tie(b.second, a.first) < std::tie(a.second, b.first);
            });
  if (label.components.empty()) {
    label.display = "1";
  } else {
    std::ostringstream os;
    for (size_t i = 0; i < label.components.size(); ++i) {
      if (i) os << "+";
      os << label.components[i].first << label.components[i].second;
    }
    label.display = os.str();
  }
  return label;
}

std::vector<int> typeA_subset_partition(SubsetBits s, int n) {
  // Nodes 0..n-1 on the affine cycle; each maximal arc of selected nodes of
  // length L contributes a part L+1.
  std::vector<int> parts;
  int used = 0;
  if (s == (1u << n) - 1) throw std::invalid_argument("subset must be proper");
  for (int start = 0; start < n; ++start) {
    const int prev = (start + n - 1) % n;
    if (!(s & (1u << start)) || (s & (1u << prev))) continue;
    int len = 0;
    for (int i = start; s & (1u << (i % n)); ++i) ++len;
    parts.push_back(len + 1);
    used += len + 1;
  }
  while (used < n) {
    parts.push_back(1);
    ++used;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string partition_to_string(const std::vector<int>& partition) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < partition.size(); ++i) {
    if (i) os << ",";
    os << partition[i];
  }
  os << ")";
  return os.str();
}

int GenusClassification::class_of_key(const std::string& key) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].key == key) return static_cast<int>(i);
  return -1;
}

namespace {

GenusClassification classify_genera_typeA(const RootSystem& rs, const ExtendedDiagram& ext) {
  const int n = rs.rank + 1;
  GenusClassification out;
  std::map<std::vector<int>, int> index;
  for (SubsetBits s : enumerate_proper_subsets(ext)) {
    const std::vector<int> lambda = typeA_subset_partition(s, n);
    auto it = index.find(lambda);
    if (it == index.end()) {
      GenusClass cls;
      cls.key = "A:" + partition_to_string(lambda);
      cls.label.partition = lambda;
      cls.label.display = partition_to_string(lambda);
      for (int p : lambda)
        if (p >= 2) cls.label.components.emplace_back("A", p - 1);
      // A parabolic representative: consecutive blocks of simple nodes.
      SubsetBits j = 0;
      int pos = 1;
      for (int p : lambda) {
        for (int i = 0; i < p - 1; ++i) j |= 1u << (pos + i);
        pos += p;
      }
      cls.parabolic_j = j;
      index[lambda] = static_cast<int>(out.classes.size());
      out.classes.push_back(std::move(cls));
      it = index.find(lambda);
    }
    out.classes[it->second].subsets.push_back(s);
  }
  return out;
}

}  // namespace

GenusClassification classify_genera(const RootSystem& rs, const ExtendedDiagram& ext,
                                    const WeylGroup* w) {
  if (rs.type == Type::A && w == nullptr) return classify_genera_typeA(rs, ext);
  if (w == nullptr)
    throw CapExceededError("classify_genera: explicit Weyl group required for types B/C/D");

  GenusClassification out;
  std::map<std::string, int> index;
  for (SubsetBits s : enumerate_proper_subsets(ext)) {
    std::vector<VecI> seeds;
    for (size_t i = 0; i < ext.node_roots.size(); ++i)
      if (s & (1u << i)) seeds.push_back(ext.node_roots[i]);
    const std::vector<VecI> sub = closure_subsystem(seeds, rs);
    const std::string key = canonical_subsystem_key(sub, *w);
    auto it = index.find(key);
    if (it == index.end()) {
      GenusClass cls;
      cls.key = key;
      cls.label = classify_subsystem(sub, rs);
      if (rs.type == Type::A) {
        // Partition via multiset of component ranks (+1 each), padded to n.
        std::vector<int> lambda;
        int used = 0;
        for (const auto& [fam, k] : cls.label.components) {
          lambda.push_back(k + 1);
          used += k + 1;
        }
        while (used < rs.rank + 1) {
          lambda.push_back(1);
          ++used;
        }
        std::sort(lambda.rbegin(), lambda.rend());
        cls.label.partition = lambda;
        cls.label.display = partition_to_string(lambda);
      }
      index[key] = static_cast<int>(out.classes.size());
      out.classes.push_back(std::move(cls));
      it = index.find(key);
    }
    out.classes[it->second].subsets.push_back(s);
  }
  // Match each class to a standard parabolic W_J where one exists.
  const SubsetBits simple_mask_limit = 1u << (rs.rank + 1);
  for (SubsetBits j = 0; j < simple_mask_limit; j += 2) {  // bit 0 (affine node) off
    std::vector<VecI> seeds;
    for (int i = 1; i <= rs.rank; ++i)
      if (j & (1u << i)) seeds.push_back(ext.node_roots[i]);
    const std::string key = canonical_subsystem_key(closure_subsystem(seeds, rs), *w);
    const int idx = out.class_of_key(key);
    if (idx >= 0 && !out.classes[idx].parabolic_j) out.classes[idx].parabolic_j = j;
  }
  return out;
}

std::vector<std::vector<SubsetBits>> w_equivalence_classes(const RootSystem& rs,
                                                           const ExtendedDiagram& ext,
                                                           const WeylGroup& w) {
  std::map<VecI, int> node_of_root;
  for (size_t i = 0; i < ext.node_roots.size(); ++i) node_of_root[ext.node_roots[i]] = static_cast<int>(i);
  const std::vector<SubsetBits> subsets = enumerate_proper_subsets(ext);
  std::map<SubsetBits, int> pos;
  for (size_t i = 0; i < subsets.size(); ++i) pos[subsets[i]] = static_cast<int>(i);

  std::vector<int> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t si = 0; si < subsets.size(); ++si) {
    const SubsetBits s = subsets[si];
    std::vector<VecI> roots;
    for (size_t i = 0; i < ext.node_roots.size(); ++i)
      if (s & (1u << i)) roots.push_back(ext.node_roots[i]);
    for (const WeylElement& g : w.elements) {
      SubsetBits image = 0;
      bool lands_on_diagram = true;
      for (const VecI& r : roots) {
        auto it = node_of_root.find(apply(g, r));
        if (it == node_of_root.end()) {
          lands_on_diagram = false;
          break;
        }
        image |= 1u << it->second;
      }
      if (!lands_on_diagram) continue;
      const int a = find(static_cast<int>(si)), b = find(pos.at(image));
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, std::vector<SubsetBits>> grouped;
  for (size_t i = 0; i < subsets.size(); ++i) grouped[find(static_cast<int>(i))].push_back(subsets[i]);
  std::vector<std::vector<SubsetBits>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  return out;
}

Rat conjecture1_count(const GenusClass& cls, const ExtendedDiagram& ext, const Int& q,
                      const Int& f) {
  Int total = 0;
  for (SubsetBits s : cls.subsets) total += p_of(s, ext, q);
  return Rat(total, f);
}

Rat split_total(const RootSystem& rs, const Int& q) {
  const ExtendedDiagram ext = marks(rs);
  const Int f = connection_index(rs).connection_index;
  Int total = 0;
  for (SubsetBits s : enumerate_proper_subsets(ext)) total += p_of(s, ext, q);
  return Rat(total, f);
}

Rat regular_split_count(const RootSystem& rs, const Int& q) {
  const ExtendedDiagram ext = marks(rs);
  const Int f = connection_index(rs).connection_index;
  return Rat(p_of(0, ext, q), f);
}

}  // namespace orbitlab
