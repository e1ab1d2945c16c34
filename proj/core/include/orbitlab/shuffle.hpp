#pragma once

// Inverse q-shuffles of a deck of n cards: the deterministic pile-assignment
// map, exact identity counting, the partition-indexed decomposition of
// identity assignments, and a seeded Monte Carlo sampler.

#include "orbitlab/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace orbitlab {

// word[j] in {1..q}: the pile card j is dealt to, in deck order.
struct ShuffleOutcome {
  std::vector<int> permutation;   // position -> card, after piles are stacked
  std::vector<int> pile_sizes;    // x_1..x_q
};

ShuffleOutcome apply_inverse_shuffle(const std::vector<int>& word, int q);

bool is_identity(const ShuffleOutcome& outcome);

// Number of assignment words producing the identity: C(n+q-1, q-1).
Int identity_count_exact(int n, int q);

// sum over lambda |- n of q(q-1)...(q - sum r_i + 1) / prod r_i!.
Int lhs_partition_sum(int n, int q);

// The single lambda term of the sum above (the multinomial count of
// identity assignments whose nonzero pile sizes have pattern lambda).
Int lhs_partition_term(const std::vector<int>& lambda, int q);

// Exhaustive scan of all q^n words: identity-producing words keyed by the
// multiset pattern of their nonzero pile sizes.
std::map<std::vector<int>, Int> partition_identity_census(int n, int q,
                                                          const Int& cap = Int(1000000));

// Partitions of n in decreasing-part lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

struct ShuffleStatistics {
  int n = 0;
  int q = 0;
  long long trials = 0;
  uint64_t seed = 0;
  long long identity_hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double exact_value = 0.0;
  double z_score = 0.0;
};

// Monte Carlo over uniform assignment words; mt19937_64 seeded with `seed`,
// so results are bit-reproducible across platforms.
ShuffleStatistics sample_inverse_shuffles(int n, int q, long long trials, uint64_t seed);

}  // namespace orbitlab
