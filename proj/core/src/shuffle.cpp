#include "orbitlab/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace orbitlab {

ShuffleOutcome apply_inverse_shuffle(const std::vector<int>& word, int q) {
  ShuffleOutcome out;
  out.pile_sizes.assign(q, 0);
  for (int pile : word) {
    if (pile < 1 || pile > q) throw std::invalid_argument("pile letter out of range");
    ++out.pile_sizes[pile - 1];
  }
  // Piles are stacked left to right; within a pile, cards keep deck order.
  for (int pile = 1; pile <= q; ++pile)
    for (size_t card = 0; card < word.size(); ++card)
      if (word[card] == pile) out.permutation.push_back(static_cast<int>(card));
  return out;
}

bool is_identity(const ShuffleOutcome& outcome) {
  for (size_t i = 0; i < outcome.permutation.size(); ++i)
    if (outcome.permutation[i] != static_cast<int>(i)) return false;
  return true;
}

Int identity_count_exact(int n, int q) {
  if (n < 0 || q < 1) throw std::invalid_argument("identity_count_exact: need n >= 0, q >= 1");
  return binomial(Int(n + q - 1), q - 1);
}

Int lhs_partition_term(const std::vector<int>& lambda, int q) {
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  int sum_r = 0;
  Int denom = 1;
  for (const auto& [part, r] : mult) {
    sum_r += r;
    denom *= factorial(r);
  }
  if (sum_r > q) return 0;
  const Int num = falling_factorial(Int(q), sum_r);
  if (num % denom != 0) throw std::logic_error("multinomial term is not an integer");
  return num / denom;
}

Int lhs_partition_sum(int n, int q) {
  Int total = 0;
  for (const std::vector<int>& lambda : partitions_of(n)) total += lhs_partition_term(lambda, q);
  return total;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Decreasing-part lexicographic generation.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::map<std::vector<int>, Int> partition_identity_census(int n, int q, const Int& cap) {
  Int words = 1;
  for (int i = 0; i < n; ++i) words *= q;
  if (words > cap)
    throw CapExceededError(
        "partition_identity_census: q^n exceeds cap; use sample_inverse_shuffles instead");
  std::map<std::vector<int>, Int> census;
  for (const std::vector<int>& lambda : partitions_of(n)) census[lambda] = 0;
  std::vector<int> word(n, 1);
  for (;;) {
    const ShuffleOutcome outcome = apply_inverse_shuffle(word, q);
    if (is_identity(outcome)) {
      std::vector<int> pattern;
      for (int x : outcome.pile_sizes)
        if (x > 0) pattern.push_back(x);
      std::sort(pattern.rbegin(), pattern.rend());
      census[pattern] += 1;
    }
    int i = n - 1;
    while (i >= 0 && word[i] == q) {
      word[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++word[i];
  }
  return census;
}

ShuffleStatistics sample_inverse_shuffles(int n, int q, long long trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("sample_inverse_shuffles: trials must be >= 1");
  ShuffleStatistics stats;
  stats.n = n;
  stats.q = q;
  stats.trials = trials;
  stats.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pile(1, q);
  std::vector<int> word(n);
  for (long long t = 0; t < trials; ++t) {
    // Identity iff the word is weakly increasing; no need to assemble piles.
    bool increasing = true;
    int prev = 0;
    for (int j = 0; j < n; ++j) {
      word[j] = pile(rng);
      if (word[j] < prev) increasing = false;
      prev = word[j];
    }
    if (increasing) ++stats.identity_hits;
  }
  stats.estimate = static_cast<double>(stats.identity_hits) / static_cast<double>(trials);
  stats.std_error =
      std::sqrt(std::max(stats.estimate * (1.0 - stats.estimate), 1e-300) / static_cast<double>(trials));
  double exact = static_cast<double>(identity_count_exact(n, q));
  for (int i = 0; i < n; ++i) exact /= q;
  stats.exact_value = exact;
  stats.z_score = (stats.estimate - stats.exact_value) / stats.std_error;
  return stats;
}

}  // namespace orbitlab
