#include <nvg/polyfit.hpp>

#include <nvg/counting.hpp>
#include <nvg/errors.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace nvg {

namespace {

void trim(RationalPolynomial& p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

}  // namespace

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a.coeffs == b.coeffs;
}

bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
  return !(a == b);
}

BigRational evaluate(const RationalPolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial from_kk2_basis(const std::vector<BigRational>& q) {
  // u = x + x^2; build sum of q[i] u^i by running powers of u.
  RationalPolynomial out;
  std::vector<BigRational> power{1};
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] != 0) {
      if (out.coeffs.size() < power.size()) out.coeffs.resize(power.size(), BigRational(0));
      for (std::size_t j = 0; j < power.size(); ++j) out.coeffs[j] += q[i] * power[j];
    }
    if (i + 1 < q.size()) {
      std::vector<BigRational> next(power.size() + 2, BigRational(0));
      for (std::size_t j = 0; j < power.size(); ++j) {
        next[j + 1] += power[j];
        next[j + 2] += power[j];
      }
      power = std::move(next);
    }
  }
  trim(out);
  return out;
}

RationalPolynomial interpolate(const std::vector<long long>& xs,
                               const std::vector<BigInt>& ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw std::invalid_argument("interpolate: need equally many nodes and values, at least one");
  if (std::set<long long>(xs.begin(), xs.end()).size() != xs.size())
    throw std::invalid_argument("interpolate: nodes must be distinct");
  const int m = static_cast<int>(xs.size());
  std::vector<BigRational> dd(ys.begin(), ys.end());
  for (int level = 1; level < m; ++level)
    for (int i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(xs[i] - xs[i - level]);
  /* Newton form: sum of dd[i] * prod over j < i of (x - xs[j]). */
  RationalPolynomial p;
  p.coeffs = {dd[0]};
  std::vector<BigRational> basis{1};
  for (int i = 1; i < m; ++i) {
    std::vector<BigRational> next(basis.size() + 1, BigRational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= BigRational(xs[i - 1]) * basis[j];
    }
    basis = std::move(next);
    if (dd[i] != 0) {
      if (p.coeffs.size() < basis.size()) p.coeffs.resize(basis.size(), BigRational(0));
      for (std::size_t j = 0; j < basis.size(); ++j) p.coeffs[j] += dd[i] * basis[j];
    }
  }
  trim(p);
  return p;
}

std::optional<int> detect_degree(const std::vector<BigInt>& values, int margin) {
  if (margin < 1) throw std::invalid_argument("detect_degree: margin must be >= 1");
  const int k_max = static_cast<int>(values.size()) - 1;
  if (k_max < margin)
    throw std::invalid_argument("detect_degree: series too short for margin " +
                                std::to_string(margin));
  std::vector<BigInt> diff = values;
  for (int d = 0; d <= k_max - margin; ++d) {
    // diff holds the d-th differences here; advance to the (d+1)-th.
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    // The row has k_max - d >= margin entries by the loop bound.
    if (std::all_of(diff.begin(), diff.end(), [](const BigInt& v) { return v == 0; }))
      return d;
  }
  return std::nullopt;
}

std::optional<std::vector<BigInt>> to_binomial_basis(const RationalPolynomial& p) {
  if (p.coeffs.empty())
    throw std::invalid_argument("to_binomial_basis: zero polynomial");
  const int d = p.degree();
  std::vector<BigRational> work(d + 1);
  for (int i = 0; i <= d; ++i) work[i] = evaluate(p, i);
  std::vector<BigRational> delta;  // delta[j] = j-th forward difference at 0
  delta.reserve(d + 1);
  for (int j = 0; j <= d; ++j) {
    delta.push_back(work[0]);
    for (std::size_t i = 0; i + 1 < work.size(); ++i) work[i] = work[i + 1] - work[i];
    work.pop_back();
  }
  std::vector<BigInt> c(d + 1);
  for (int i = 0; i <= d; ++i) {
    const BigRational& v = delta[d - i];  // c[i] multiplies C(x, d-i)
    if (!is_integer(v)) return std::nullopt;
    c[i] = num(v);
  }
  return c;
}

std::optional<std::vector<BigRational>> to_kk2_basis(const RationalPolynomial& p) {
  if (p.coeffs.empty()) throw std::invalid_argument("to_kk2_basis: zero polynomial");
  const int d = p.degree();
  if (d % 2 != 0) return std::nullopt;  // every (x + x^2)^i has even degree 2i
  const int m = d / 2;
  std::vector<BigRational> q(m + 1, BigRational(0));
  RationalPolynomial rem = p;
  /* (x + x^2)^i is monic of degree 2i, so eliminating from the top degree
   * down is the unique candidate; a nonzero final remainder means p is
   * outside the span. */
  for (int i = m; i >= 0; --i) {
    if (rem.degree() > 2 * i) return std::nullopt;  // odd-degree leftovers cannot be killed
    if (rem.degree() == 2 * i && rem.coeffs[2 * i] != 0) {
      q[i] = rem.coeffs[2 * i];
      RationalPolynomial u_i = from_kk2_basis([&] {
        std::vector<BigRational> e(i + 1, BigRational(0));
        e[i] = 1;
        return e;
      }());
      if (rem.coeffs.size() < u_i.coeffs.size())
        rem.coeffs.resize(u_i.coeffs.size(), BigRational(0));
      for (std::size_t j = 0; j < u_i.coeffs.size(); ++j)
        rem.coeffs[j] -= q[i] * u_i.coeffs[j];
      trim(rem);
    }
  }
  if (!rem.coeffs.empty()) return std::nullopt;
  return q;
}

std::vector<HypothesisReport> check_hypotheses(const std::vector<int>& ns, int k_max,
                                               const EnumerationOptions& opts) {
  if (ns.empty()) throw std::invalid_argument("check_hypotheses: empty batch");
  constexpr int kMargin = 3;
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("check_hypotheses: n must be >= 2");
    if (k_max < euler_phi(n) + kMargin)
      throw std::invalid_argument("check_hypotheses: k_max must be >= phi(n) + " +
                                  std::to_string(kMargin) + " for n=" + std::to_string(n));
  }

  std::vector<HypothesisReport> reports;
  reports.reserve(ns.size());
  for (int n : ns) {
    GrowthSeries series = enumerate_growth(n, k_max, opts);
    std::vector<BigInt> values;
    values.reserve(series.rows.size());
    for (const GrowthRow& row : series.rows) values.push_back(row.p);

    HypothesisReport rep;
    rep.n = n;
    rep.phi_n = static_cast<int>(euler_phi(n));

    std::vector<long long> nodes(rep.phi_n + 1);
    std::vector<BigInt> node_values(rep.phi_n + 1);
    for (int i = 0; i <= rep.phi_n; ++i) {
      nodes[i] = i;
      node_values[i] = values[i];
    }
    rep.interpolant = interpolate(nodes, node_values);

    rep.polynomial_on_tested_range = true;
    for (int k = rep.phi_n + 1; k <= k_max; ++k)
      if (evaluate(rep.interpolant, k) != BigRational(values[k])) {
        rep.polynomial_on_tested_range = false;
        break;
      }

    rep.degree_observed = detect_degree(values, kMargin);
    rep.degree_matches = rep.degree_observed.has_value() && *rep.degree_observed == rep.phi_n;

    rep.leading_coeff =
        rep.interpolant.coeffs.empty() ? BigRational(0) : rep.interpolant.coeffs.back();
    if (is_prime(n)) {
      BigInt fact = 1;
      for (int i = 2; i < n; ++i) fact *= i;
      rep.leading_matches_factorial = rep.leading_coeff == BigRational(BigInt(1), fact);
    }

    rep.kk2 = to_kk2_basis(rep.interpolant);
    rep.kk2_representable = rep.kk2.has_value();
    rep.binomial_c = to_binomial_basis(rep.interpolant);
    rep.integer_valued_checked_range = {0, k_max};
    reports.push_back(std::move(rep));
  }

  for (std::size_t i = 0; i < reports.size(); ++i)
    for (std::size_t j = 0; j < reports.size(); ++j)
      if (i != j && reports[i].interpolant == reports[j].interpolant)
        reports[i].coincident_with.push_back(reports[j].n);
  for (HypothesisReport& rep : reports)
    std::sort(rep.coincident_with.begin(), rep.coincident_with.end());

  return reports;
}

}  // namespace nvg
