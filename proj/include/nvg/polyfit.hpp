#pragma once

#include <nvg/enumeration.hpp>
#include <nvg/numeric.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace nvg {

// Dense polynomial over Q, constant term first, trailing zeros trimmed.
// The zero polynomial has empty coeffs and degree() == -1.
struct RationalPolynomial {
  std::vector<BigRational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);
bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b);

BigRational evaluate(const RationalPolynomial& p, const BigRational& x);

// sum of q[i] * (x + x^2)^i as a monomial-basis polynomial.
RationalPolynomial from_kk2_basis(const std::vector<BigRational>& q);

// Newton divided differences over exact rationals.  Nodes must be distinct
// and nonempty; the result evaluates back to every input exactly.
RationalPolynomial interpolate(const std::vector<long long>& xs,
                               const std::vector<BigInt>& ys);

// Smallest d whose (d+1)-th finite differences vanish identically, accepted
// only when at least `margin` difference entries are in evidence, so only
// d <= values.size()-1-margin is testable.  nullopt when no testable degree
// qualifies.  Throws std::invalid_argument when the series cannot support
// even d = 0.
std::optional<int> detect_degree(const std::vector<BigInt>& values, int margin = 3);

// c with p(x) = c[0] C(x,d) + c[1] C(x,d-1) + ... + c[d], d = deg p, taken
// from the iterated forward differences of p at 0.  nullopt when some
// difference is not an integer (p is not integer-valued); that is a result,
// not an error.  The zero polynomial throws.
std::optional<std::vector<BigInt>> to_binomial_basis(const RationalPolynomial& p);

// q with p(x) = sum of q[i] (x + x^2)^i, found by exact elimination from the
// top degree down.  nullopt when p is outside the span.  The zero
// polynomial throws.
std::optional<std::vector<BigRational>> to_kk2_basis(const RationalPolynomial& p);

struct HypothesisReport {
  int n = 0;
  int phi_n = 0;
  // detect_degree over the enumerated p values; nullopt when nothing
  // testable vanished.
  std::optional<int> degree_observed;
  bool degree_matches = false;  // degree_observed == phi_n
  // Interpolant over nodes 0..phi_n.
  RationalPolynomial interpolant;
  // Interpolant reproduced every enumerated value beyond the nodes.
  bool polynomial_on_tested_range = false;
  BigRational leading_coeff;
  // Engaged for prime n only: leading_coeff == 1/(n-1)!.
  std::optional<bool> leading_matches_factorial;
  std::optional<std::vector<BigRational>> kk2;  // engaged iff representable
  bool kk2_representable = false;
  std::optional<std::vector<BigInt>> binomial_c;  // engaged iff integer-valued
  std::pair<int, int> integer_valued_checked_range{0, 0};
  // Other n in the same batch with the identical interpolant, ascending.
  std::vector<int> coincident_with;
};

// Enumerates each n up to k_max (shared across the batch), interpolates over
// nodes 0..phi(n), and fills one report per n.  Coincidence is exact
// coefficient-vector equality within the batch.  Requires every n >= 2 and
// k_max >= phi(n) + 3 for every n in the batch.
std::vector<HypothesisReport> check_hypotheses(const std::vector<int>& ns, int k_max,
                                               const EnumerationOptions& opts = {});

}  // namespace nvg
