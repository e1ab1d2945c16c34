#pragma once

// Brute-force finite-field oracles for split semisimple orbit counting:
// type A root-multiset enumeration and B/C/D toral point orbit censuses,
// labeled by the conjugacy class of the stabilizer's root subsystem.

#include "orbitlab/genus.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbitlab {

struct OrbitCensus {
  // Type A: key is the multiplicity partition lambda |- n.
  std::map<std::vector<int>, Int> by_partition;
  // B/C/D: key is the canonical subsystem key of the stabilizer.
  std::map<std::string, Int> by_key;
  std::map<std::string, std::string> key_display;
  Int total = 0;
  Int regular = 0;
};

// Multisets of n roots in F_q with zero sum, keyed by multiplicity partition.
// Requires gcd(q, n) = 1 (q regular for the type A count).
OrbitCensus typeA_split_orbit_census(int n, long long q, const Int& cap = Int(1000000));

// Count of split monic degree-n polynomials of factorization lambda with no
// trace restriction, by exhaustive enumeration.
Int typeA_unrestricted_count(int n, long long q, const std::vector<int>& lambda,
                             const Int& cap = Int(1000000));

// Closed form (q-1)...(q+1-sum r_i) / prod r_i! for the trace-zero count.
Int typeA_genus_closed_form(const std::vector<int>& lambda, const Int& q);

// Orbits of the explicit Weyl group on F_q^n (q odd), partitioned by
// stabilizer subsystem class. Covers types B, C and D.
OrbitCensus toral_orbit_census(const RootSystem& rs, const WeylGroup& w, long long q,
                               const Int& cap = Int(1000000));

struct StabilizerGenus {
  std::vector<VecI> vanishing_subsystem;  // roots alpha with <alpha,x> = 0 in F_q
  Int scan_order;                         // |{w in W : wx = x mod q}|
  Int generated_order;                    // order of the group generated by the
                                          // reflections in vanishing roots
  bool agree;                             // scan stabilizer == generated subgroup
};

StabilizerGenus stabilizer_genus(const std::vector<long long>& point, const WeylGroup& w,
                                 const RootSystem& rs, long long q);

}  // namespace orbitlab
