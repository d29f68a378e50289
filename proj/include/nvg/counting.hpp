#pragma once

#include <nvg/numeric.hpp>

namespace nvg {

// C(m, j), zero whenever j < 0, m < 0, or j > m.
BigInt binomial(long long m, long long j);

// Euler's totient by trial division.  euler_phi(1) = 1; n <= 0 throws.
long long euler_phi(long long n);

bool is_prime(long long n);

// Number of rotation classes of compositions of m into n positive parts:
//   (1/m) * sum over j | gcd(m, n) of phi(j) * C(m/j, n/j).
// Zero when m < n, m = 0, or n = 0.  Divisibility of the sum by m is an
// invariant and is asserted.
BigInt necklace_count(long long m, long long n);

// Growth increment for prime p at step k >= 1.  Computes both closed forms,
//   necklace_count(k+p, p) - necklace_count(k, p)
// and
//   (C(k+p-1, p-1) - C(k-1, p-1)) / p,
// and insists they agree before returning.
BigInt q_prime(long long p, long long k);

// Cumulative growth for prime p: 1 + sum of q_prime(p, j), j = 1..k.
BigInt p_prime(long long p, long long k);

// Rotation-class upper bound on the growth increment for arbitrary n >= 2.
// Coincides with q_prime when n is prime.
BigInt q_upper_bound(long long n, long long k);

}  // namespace nvg
