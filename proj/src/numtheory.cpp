#include "odg/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace odg {

namespace {

void require_positive(std::int64_t n, const char* op) {
  if (n < 1) {
    throw std::invalid_argument(std::string(op) + " requires n >= 1");
  }
}

}  // namespace

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace odg
