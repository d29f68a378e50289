#include <nvg/cyclotomic.hpp>

#include <nvg/counting.hpp>
#include <nvg/errors.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace nvg {

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Quotient of a by monic b; any nonzero remainder is an invariant failure.
std::vector<BigInt> exact_divide(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) throw InvariantError("exact_divide: dividend degree below divisor degree");
  std::vector<BigInt> q(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (a[i] == 0) continue;
    BigInt c = a[i];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const BigInt& c : a)
    if (c != 0) throw InvariantError("cyclotomic_polynomial: division left a remainder");
  return q;
}

/* x^deg == -(phi[0] + phi[1] x + ... + phi[deg-1] x^(deg-1)) for monic phi,
 * applied top down until the working degree drops below deg. */
void reduce_in_place(std::vector<BigInt>& r, const std::vector<BigInt>& phi) {
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= deg; --i) {
    if (r[i] == 0) continue;
    BigInt c = std::move(r[i]);
    r[i] = 0;
    for (int j = 0; j < deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
}

const std::vector<BigInt>& cached_phi_coeffs(int n);

CyclotomicPolynomial compute_cyclotomic(int n) {
  std::vector<BigInt> numerator(n + 1);
  numerator[0] = -1;
  numerator[n] = 1;
  std::vector<BigInt> divisor{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) divisor = poly_mul(divisor, cached_phi_coeffs(d));
  CyclotomicPolynomial phi;
  phi.n = n;
  phi.coeffs = exact_divide(std::move(numerator), divisor);
  if (phi.degree() != euler_phi(n))
    throw InvariantError("cyclotomic_polynomial: degree differs from phi(n)");
  if (phi.coeffs.back() != 1)
    throw InvariantError("cyclotomic_polynomial: result not monic");
  return phi;
}

const std::vector<BigInt>& cached_phi_coeffs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<BigInt>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Computed outside the lock; recursion re-enters this function.
  CyclotomicPolynomial phi = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(phi.coeffs)).first->second;
}

void check_element(const ReducedElement& z, const char* who) {
  if (z.n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (static_cast<long long>(z.coeffs.size()) != euler_phi(z.n))
    throw std::invalid_argument(std::string(who) + ": coefficient vector has wrong length");
}

}  // namespace

CyclotomicPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  CyclotomicPolynomial phi;
  phi.n = n;
  phi.coeffs = cached_phi_coeffs(n);
  return phi;
}

bool operator==(const ReducedElement& a, const ReducedElement& b) {
  return a.n == b.n && a.coeffs == b.coeffs;
}

bool operator!=(const ReducedElement& a, const ReducedElement& b) { return !(a == b); }

ReducedElement reduce(const std::vector<BigInt>& raw, int n) {
  if (n < 1) throw std::invalid_argument("reduce: n must be >= 1");
  if (static_cast<int>(raw.size()) != n)
    throw std::invalid_argument("reduce: raw must have exactly n coefficients");
  std::vector<BigInt> r = raw;
  reduce_in_place(r, cached_phi_coeffs(n));
  return ReducedElement{n, std::move(r)};
}

ReducedElement mul_by_root(const ReducedElement& z, long long j) {
  check_element(z, "mul_by_root");
  const int n = z.n;
  const int s = static_cast<int>(((j % n) + n) % n);
  std::vector<BigInt> raw(n);
  for (std::size_t i = 0; i < z.coeffs.size(); ++i)
    raw[(i + s) % n] = z.coeffs[i];
  reduce_in_place(raw, cached_phi_coeffs(n));
  return ReducedElement{n, std::move(raw)};
}

ReducedElement mul(const ReducedElement& a, const ReducedElement& b) {
  check_element(a, "mul");
  check_element(b, "mul");
  if (a.n != b.n) throw std::invalid_argument("mul: factors live in different rings");
  const int n = a.n;
  // Fold the convolution mod x^n - 1 first (x^n acts as 1), then reduce.
  std::vector<BigInt> folded(n);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      folded[(i + j) % n] += a.coeffs[i] * b.coeffs[j];
  }
  reduce_in_place(folded, cached_phi_coeffs(n));
  return ReducedElement{n, std::move(folded)};
}

OrbitClassKey orbit_class_key(const ReducedElement& z) {
  check_element(z, "orbit_class_key");
  const int n = z.n;
  const std::vector<BigInt>& phi = cached_phi_coeffs(n);
  OrbitClassKey best;
  std::vector<BigInt> raw;
  for (int s = 0; s < n; ++s) {
    raw.assign(n, BigInt(0));
    for (std::size_t i = 0; i < z.coeffs.size(); ++i)
      raw[(i + s) % n] = z.coeffs[i];
    reduce_in_place(raw, phi);
    if (s == 0 || raw < best) best = raw;
  }
  return best;
}

}  // namespace nvg
