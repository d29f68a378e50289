#pragma once

#include <nvg/numeric.hpp>

#include <vector>

namespace nvg {

/*
 * Exact arithmetic in Z[x]/(Phi_n), with x standing for a fixed primitive
 * n-th root of unity.  Elements are canonical coefficient vectors of length
 * phi(n) = deg Phi_n over the basis 1, x, ..., x^(phi(n)-1).  Equality of
 * elements is equality of canonical vectors; no floating point is involved
 * anywhere in this module.
 */

// Phi_n as a dense coefficient vector, constant term first.  Monic, degree
// phi(n), integer coefficients.
struct CyclotomicPolynomial {
  int n = 0;
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Built by exact division: Phi_n = (x^n - 1) / prod of Phi_d over proper
// divisors d of n.  A nonzero division remainder, a non-monic result, or a
// degree other than phi(n) throws InvariantError.  Results are memoized;
// safe to call concurrently.
CyclotomicPolynomial cyclotomic_polynomial(int n);

// A ring element reduced mod Phi_n.  coeffs.size() == phi(n) always.
struct ReducedElement {
  int n = 0;
  std::vector<BigInt> coeffs;
};

bool operator==(const ReducedElement& a, const ReducedElement& b);
bool operator!=(const ReducedElement& a, const ReducedElement& b);

// Remainder of raw[0] + raw[1] x + ... + raw[n-1] x^(n-1) mod Phi_n.
// raw.size() must be exactly n.  Idempotent on already-canonical vectors
// padded back to length n.
ReducedElement reduce(const std::vector<BigInt>& raw, int n);

// z * x^j for any integer j; exponents live mod n, so j may be negative or
// exceed n.  Implemented as a cyclic shift of the length-n embedding (x^n
// acts as 1) followed by one reduction.
ReducedElement mul_by_root(const ReducedElement& z, long long j);

// Ring product reduced mod Phi_n.  Factors must share the same n.
ReducedElement mul(const ReducedElement& a, const ReducedElement& b);

// Lexicographically least canonical vector among z, x z, ..., x^(n-1) z.
// Two elements receive equal keys iff they differ by a power of x, so the
// key identifies the rotation class of z.
using OrbitClassKey = std::vector<BigInt>;

OrbitClassKey orbit_class_key(const ReducedElement& z);

}  // namespace nvg
