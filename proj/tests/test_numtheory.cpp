#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "odg/numtheory.hpp"
#include "oracles.hpp"

using namespace odg;

TEST_CASE("factorize canonical forms") {
  CHECK(factorize(1).empty());
  // Frozen from the trial-division oracle.
  for (std::int64_t n : {12, 24}) {
    Factorization expected;
    for (const auto& [p, e] : oracles::factorize_by_trial_division(n))
      expected.push_back({p, e});
    CHECK(factorize(n) == expected);
  }
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(24) == Factorization{{2, 3}, {3, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization multiplies back and stays sorted") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t product = 1;
    std::int64_t last_prime = 0;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(p > last_prime);
      CHECK(e >= 1);
      last_prime = p;
      for (int i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("euler_phi values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);    // p^{i-1}(p-1) at 2^3
  CHECK(euler_phi(30) == 8);   // (2-1)(3-1)(5-1)
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("euler_phi is multiplicative on coprime pairs") {
  for (std::int64_t m = 1; m <= 100; ++m)
    for (std::int64_t n = 1; n <= 100; ++n)
      if (std::gcd(m, n) == 1) CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
}

TEST_CASE("phi sums over divisors to n") {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(n)) sum += euler_phi(d);
    CHECK(sum == n);
  }
}

TEST_CASE("euler_phi matches gcd counting") {
  for (std::int64_t n = 1; n <= 300; ++n) CHECK(euler_phi(n) == oracles::phi_by_gcd_count(n));
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(15) == std::vector<std::int64_t>{1, 3, 5, 15});
  CHECK(divisors(30) == std::vector<std::int64_t>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
  for (std::int64_t n = 1; n <= 1000; ++n)
    CHECK(divisors(n) == oracles::divisors_by_filter(n));
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  for (std::int64_t n = 0; n <= 500; ++n) {
    CHECK(is_prime(n) == (oracles::divisors_by_filter(std::max<std::int64_t>(n, 1)).size() == 2 && n >= 2));
  }
}
