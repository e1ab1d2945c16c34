#pragma once

// Proper subsets S of the affine diagram, the composition counts p(S,t),
// classification of the reflection subgroups W_S up to conjugacy, and the
// per-genus orbit count sum_{S ~ J} p(S,q) / f.

#include "orbitlab/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

// Subsets of the r+1 affine nodes as bitmasks (bit i = node i, node 0 = -theta).
using SubsetBits = uint32_t;

std::vector<SubsetBits> enumerate_proper_subsets(const ExtendedDiagram& ext);

// Number of solutions in strictly positive integers of
// sum_{nodes outside S} c_alpha * y_alpha = t.
Int p_of(SubsetBits s, const ExtendedDiagram& ext, const Int& t);

// A conjugacy class of reflection subgroups: its irreducible components as
// (family letter, rank) pairs, plus the type A partition when applicable.
struct GenusLabel {
  std::vector<std::pair<std::string, int>> components;
  std::vector<int> partition;  // type A only: lambda |- n, 1-parts included
  std::string display;

  bool operator==(const GenusLabel& o) const { return display == o.display; }
};

// Full root subsystem generated by a set of roots (closure under mutual
// reflection; contains both signs).
std::vector<VecI> closure_subsystem(const std::vector<VecI>& seeds, const RootSystem& rs);

// Canonical form of a subsystem under the W-action: the lexicographically
// least among its W-images, serialized.
std::string canonical_subsystem_key(const std::vector<VecI>& subsystem, const WeylGroup& w);

// Human-readable component decomposition ("A1(l)+A1(l)", "B2", ...).
GenusLabel classify_subsystem(const std::vector<VecI>& subsystem, const RootSystem& rs);

// Partition label of a type A subset: component sizes + 1 on the affine
// cycle, padded with 1-parts to sum to n.
std::vector<int> typeA_subset_partition(SubsetBits s, int n);

struct GenusClass {
  std::string key;               // canonical subsystem key (type A: partition key)
  GenusLabel label;
  std::vector<SubsetBits> subsets;          // members, grouped by W_S-conjugacy
  std::optional<SubsetBits> parabolic_j;    // bits over nodes 1..r when W_S ~ W_J
};

struct GenusClassification {
  std::vector<GenusClass> classes;
  int class_of_key(const std::string& key) const;  // -1 when absent
};

// Classify all proper subsets of the affine diagram by conjugacy of W_S.
// Type A uses the cycle-partition shortcut and needs no explicit group;
// other types require the enumerated Weyl group.
GenusClassification classify_genera(const RootSystem& rs, const ExtendedDiagram& ext,
                                    const WeylGroup* w);

// Partition of the proper subsets under the finer relation
// S1 ~ S2 iff w(S1) = S2 for some w (subset equivalence).
std::vector<std::vector<SubsetBits>> w_equivalence_classes(const RootSystem& rs,
                                                           const ExtendedDiagram& ext,
                                                           const WeylGroup& w);

// Conjectured number of split semisimple orbits of genus `cls`:
// sum over the class of p(S,q), divided by f (kept exact).
Rat conjecture1_count(const GenusClass& cls, const ExtendedDiagram& ext, const Int& q,
                      const Int& f);

// (1/f) * sum over all proper S of p(S,q).
Rat split_total(const RootSystem& rs, const Int& q);

// p(empty set, q) / f.
Rat regular_split_count(const RootSystem& rs, const Int& q);

std::string partition_to_string(const std::vector<int>& partition);

}  // namespace orbitlab
