#include <nvg/counting.hpp>

#include <nvg/errors.hpp>

#include <numeric>
#include <stdexcept>

namespace nvg {

BigInt binomial(long long m, long long j) {
  if (j < 0 || m < 0 || j > m) return 0;
  if (j > m - j) j = m - j;
  BigInt acc = 1;
  /* acc = C(m-j+i, i) after step i, so every division below is exact. */
  for (long long i = 1; i <= j; ++i) {
    acc *= m - j + i;
    acc /= i;
  }
  return acc;
}

long long euler_phi(long long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

BigInt necklace_count(long long m, long long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("necklace_count: negative argument");
  if (m < n || m == 0 || n == 0) return 0;
  long long g = std::gcd(m, n);
  BigInt total = 0;
  for (long long j = 1; j <= g; ++j) {
    if (g % j != 0) continue;
    total += BigInt(euler_phi(j)) * binomial(m / j, n / j);
  }
  if (total % m != 0)
    throw InvariantError("necklace_count: rotation-class sum not divisible by the period");
  return total / m;
}

BigInt q_prime(long long p, long long k) {
  if (!is_prime(p)) throw std::invalid_argument("q_prime: p must be prime");
  if (k < 1) throw std::invalid_argument("q_prime: k must be >= 1");
  BigInt by_classes = necklace_count(k + p, p) - necklace_count(k, p);
  BigInt diff = binomial(k + p - 1, p - 1) - binomial(k - 1, p - 1);
  if (diff % p != 0)
    throw InvariantError("q_prime: binomial difference not divisible by p");
  BigInt by_binomials = diff / p;
  if (by_classes != by_binomials)
    throw InvariantError("q_prime: closed forms disagree");
  return by_binomials;
}

BigInt p_prime(long long p, long long k) {
  if (!is_prime(p)) throw std::invalid_argument("p_prime: p must be prime");
  if (k < 0) throw std::invalid_argument("p_prime: k must be >= 0");
  BigInt acc = 1;
  for (long long j = 1; j <= k; ++j) acc += q_prime(p, j);
  return acc;
}

BigInt q_upper_bound(long long n, long long k) {
  if (n < 2) throw std::invalid_argument("q_upper_bound: n must be >= 2");
  if (k < 1) throw std::invalid_argument("q_upper_bound: k must be >= 1");
  return necklace_count(k + n, n) - necklace_count(k, n);
}

}  // namespace nvg
