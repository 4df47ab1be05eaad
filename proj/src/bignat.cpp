#include "borsuk/bignat.hpp"

#include <vector>

namespace borsuk {

BigNat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat result = 1;
  // result stays integral after each division: C(n-k+i, i) is an integer.
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigNat binomial_pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigNat> row(n + 1);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

BigNat pow2(unsigned e) {
  BigNat r = 1;
  return r << e;
}

BigNat ceil_div(const BigNat& a, const BigNat& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  if (a < 0) throw std::invalid_argument("ceil_div: dividend must be nonnegative");
  return (a + b - 1) / b;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

}  // namespace borsuk
