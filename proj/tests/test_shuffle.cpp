#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/orbits_fq.hpp"
#include "orbitlab/shuffle.hpp"

#include <cmath>

using namespace orbitlab;

TEST_CASE("inverse shuffle assembly") {
  CHECK(is_identity(apply_inverse_shuffle({1, 1, 2}, 2)));
  CHECK(!is_identity(apply_inverse_shuffle({2, 1, 1}, 2)));
  CHECK(apply_inverse_shuffle({2, 1, 1}, 2).permutation == std::vector<int>{1, 2, 0});
  CHECK(is_identity(apply_inverse_shuffle({3}, 5)));
}

TEST_CASE("exact identity counts") {
  CHECK(identity_count_exact(3, 2) == 4);
  CHECK(identity_count_exact(3, 3) == 10);
  for (int q = 1; q <= 6; ++q) CHECK(identity_count_exact(1, q) == q);
}

TEST_CASE("exact count equals exhaustive weakly increasing word scan") {
  for (int n = 1; n <= 6; ++n)
    for (int q = 1; q <= 4; ++q) {
      Int scanned = 0;
      std::vector<int> word(n, 1);
      for (;;) {
        if (is_identity(apply_inverse_shuffle(word, q))) ++scanned;
        int i = n - 1;
        while (i >= 0 && word[i] == q) word[i--] = 1;
        if (i < 0) break;
        ++word[i];
      }
      CHECK(scanned == identity_count_exact(n, q));
    }
}

TEST_CASE("partition sum values and terms") {
  CHECK(lhs_partition_sum(3, 2) == 4);
  CHECK(lhs_partition_sum(3, 5) == 35);
  for (int q = 1; q <= 6; ++q) CHECK(lhs_partition_sum(1, q) == q);
  CHECK(lhs_partition_term({3}, 2) == 2);
  CHECK(lhs_partition_term({2, 1}, 2) == 2);
  CHECK(lhs_partition_term({1, 1, 1}, 2) == 0);
  CHECK(lhs_partition_term({3}, 5) == 5);
  CHECK(lhs_partition_term({2, 1}, 5) == 20);
  CHECK(lhs_partition_term({1, 1, 1}, 5) == 10);
}

TEST_CASE("partition generation") {
  const auto p4 = partitions_of(4);
  CHECK(p4.size() == 5);
  CHECK(p4.front() == std::vector<int>{4});
  CHECK(p4.back() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("identity census by pile-size pattern") {
  const auto c32 = partition_identity_census(3, 2);
  CHECK(c32.at({3}) == 2);
  CHECK(c32.at({2, 1}) == 2);
  CHECK(c32.at({1, 1, 1}) == 0);

  const auto c22 = partition_identity_census(2, 2);
  CHECK(c22.at({2}) == 2);
  CHECK(c22.at({1, 1}) == 1);

  const auto c33 = partition_identity_census(3, 3);
  CHECK(c33.at({3}) == 3);
  CHECK(c33.at({2, 1}) == 6);
  CHECK(c33.at({1, 1, 1}) == 1);
}

TEST_CASE("census terms match the multinomial decomposition") {
  for (int n = 1; n <= 6; ++n)
    for (int q = 1; q <= 4; ++q) {
      const auto census = partition_identity_census(n, q);
      Int total = 0;
      for (const auto& [lambda, count] : census) {
        CHECK(count == lhs_partition_term(lambda, q));
        total += count;
      }
      CHECK(total == identity_count_exact(n, q));
    }
}

TEST_CASE("partition-sum identity across the full grid") {
  for (int n = 1; n <= 12; ++n)
    for (int q = 1; q <= 20; ++q)
      CHECK(lhs_partition_sum(n, q) == identity_count_exact(n, q));
}

TEST_CASE("right side equals the rising-factorial closed form") {
  for (int n = 1; n <= 10; ++n)
    for (int q = 1; q <= 9; ++q)
      CHECK(identity_count_exact(n, q) * factorial(n) == rising_factorial(Int(q), n));
}

TEST_CASE("per-partition term over q equals the type A genus count") {
  for (int n : {3, 4})
    for (long long q : {5, 7}) {
      if (n % q == 0) continue;
      for (const std::vector<int>& lambda : partitions_of(n))
        CHECK(Rat(lhs_partition_term(lambda, static_cast<int>(q)), q) ==
              Rat(typeA_genus_closed_form(lambda, q)));
    }
}

TEST_CASE("census respects the cap with sampler guidance") {
  CHECK_THROWS_AS(partition_identity_census(12, 6, Int(1000)), CapExceededError);
}

TEST_CASE("sampler determinism and calibration") {
  const ShuffleStatistics a = sample_inverse_shuffles(3, 2, 20000, 42);
  const ShuffleStatistics b = sample_inverse_shuffles(3, 2, 20000, 42);
  CHECK(a.identity_hits == b.identity_hits);
  CHECK(a.exact_value == 0.5);
  CHECK(std::abs(a.z_score) <= 5.0);

  const ShuffleStatistics one = sample_inverse_shuffles(1, 7, 100, 9);
  CHECK(one.estimate == 1.0);

  const ShuffleStatistics big = sample_inverse_shuffles(5, 4, 100000, 1);
  CHECK(big.exact_value == 56.0 / 1024.0);
  CHECK(std::abs(big.z_score) <= 3.0);
}
