#pragma once

#include <cstdint>
#include <vector>

namespace odg {

// One prime-power factor p^e of an integer.
struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Trial-division factorization. Rejects n < 1.
Factorization factorize(std::int64_t n);

// Count of 1 <= x <= n with gcd(x, n) = 1. Rejects n < 1.
std::int64_t euler_phi(std::int64_t n);

// All positive divisors of n in increasing order. Rejects n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// True iff n has exactly two divisors.
bool is_prime(std::int64_t n);

}  // namespace odg
