#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nvg/polyfit.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using nvg::BigInt;
using nvg::BigRational;
using nvg::RationalPolynomial;

namespace {

RationalPolynomial poly(std::initializer_list<BigRational> cs) {
  return RationalPolynomial{std::vector<BigRational>(cs)};
}

// C(x, m) as a polynomial: x (x-1) ... (x-m+1) / m!, the oracle for the
// binomial-basis conversion.
RationalPolynomial binom_poly(int m) {
  RationalPolynomial p{{BigRational(1)}};
  for (int i = 0; i < m; ++i) {
    std::vector<BigRational> next(p.coeffs.size() + 1);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
      next[j + 1] += p.coeffs[j];
      next[j] -= p.coeffs[j] * i;
    }
    p.coeffs = std::move(next);
  }
  BigInt fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  for (auto& c : p.coeffs) c /= BigRational(fact);
  return p;
}

// Independent Lagrange evaluation at one point, never sharing code with the
// Newton implementation under test.
BigRational lagrange_at(const std::vector<long long>& xs, const std::vector<BigInt>& ys,
                        long long x) {
  BigRational acc(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    BigRational term(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term *= BigRational(x - xs[j]) / BigRational(xs[i] - xs[j]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("evaluate uses exact rational arithmetic") {
  RationalPolynomial p = poly({BigRational(1), BigRational(1, 2), BigRational(1, 2)});
  CHECK(nvg::evaluate(p, 10) == BigRational(56));
  CHECK(nvg::evaluate(p, BigRational(1, 2)) == BigRational(11, 8));
  CHECK(nvg::evaluate(RationalPolynomial{}, 100) == BigRational(0));
  CHECK(RationalPolynomial{}.degree() == -1);
}

TEST_CASE("interpolate, frozen examples") {
  RationalPolynomial p = nvg::interpolate({0, 1, 2}, {BigInt(1), BigInt(2), BigInt(4)});
  CHECK(p == poly({BigRational(1), BigRational(1, 2), BigRational(1, 2)}));

  // A fourth node on the same quadratic must not raise the degree.
  RationalPolynomial q =
      nvg::interpolate({0, 1, 2, 3}, {BigInt(1), BigInt(2), BigInt(4), BigInt(7)});
  CHECK(q == p);

  RationalPolynomial c = nvg::interpolate({5}, {BigInt(42)});
  CHECK(c == poly({BigRational(42)}));

  CHECK_THROWS_AS(nvg::interpolate({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(nvg::interpolate({1, 1}, {BigInt(0), BigInt(1)}),
                  std::invalid_argument);
}

TEST_CASE("interpolate agrees with Lagrange evaluation on random data") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    int d = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<long long> xs(d + 1);
    std::vector<BigInt> ys(d + 1);
    for (int i = 0; i <= d; ++i) {
      xs[i] = i;
      ys[i] = std::uniform_int_distribution<long long>(-50, 50)(rng);
    }
    RationalPolynomial p = nvg::interpolate(xs, ys);
    CHECK(p.degree() <= d);
    for (int i = 0; i <= d; ++i) CHECK(nvg::evaluate(p, xs[i]) == BigRational(ys[i]));
    for (long long x = d + 1; x <= d + 4; ++x)
      CHECK(nvg::evaluate(p, x) == lagrange_at(xs, ys, x));
  }
}

TEST_CASE("from_kk2_basis, frozen expansion") {
  RationalPolynomial p =
      nvg::from_kk2_basis({BigRational(1), BigRational(5, 12), BigRational(1, 24)});
  CHECK(p == poly({BigRational(1), BigRational(5, 12), BigRational(11, 24),
                   BigRational(1, 12), BigRational(1, 24)}));
  CHECK(nvg::from_kk2_basis({BigRational(7)}) == poly({BigRational(7)}));
}

TEST_CASE("detect_degree with the default margin") {
  // p values of the shared quadratic at k = 0..9.
  std::vector<BigInt> quad;
  for (int k = 0; k <= 9; ++k) quad.push_back(BigInt(1) + (k + k * k) / 2);
  CHECK(nvg::detect_degree(quad) == 2);

  std::vector<BigInt> linear;
  for (int k = 1; k <= 10; ++k) linear.push_back(k);
  CHECK(nvg::detect_degree(linear) == 1);

  std::vector<BigInt> constant(4, BigInt(5));
  CHECK(nvg::detect_degree(constant) == 0);

  std::vector<BigInt> powers;
  for (int k = 0; k <= 10; ++k) powers.push_back(BigInt(1) << k);
  CHECK_FALSE(nvg::detect_degree(powers).has_value());

  CHECK_THROWS_AS(nvg::detect_degree({BigInt(1), BigInt(2), BigInt(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nvg::detect_degree(quad, 0), std::invalid_argument);

  // A wider margin needs more evidence: degree 2 with 12 values leaves 9
  // third-difference entries, enough for margin 9 but not 10.
  std::vector<BigInt> quad12;
  for (int k = 0; k <= 11; ++k) quad12.push_back(BigInt(1) + (k + k * k) / 2);
  CHECK(nvg::detect_degree(quad12, 9) == 2);
  CHECK_FALSE(nvg::detect_degree(quad12, 10).has_value());
}

TEST_CASE("to_binomial_basis, frozen examples") {
  RationalPolynomial p3 = poly({BigRational(1), BigRational(1, 2), BigRational(1, 2)});
  CHECK(nvg::to_binomial_basis(p3) == std::vector<BigInt>{1, 1, 1});

  RationalPolynomial p5 =
      nvg::from_kk2_basis({BigRational(1), BigRational(5, 12), BigRational(1, 24)});
  CHECK(nvg::to_binomial_basis(p5) == std::vector<BigInt>{1, 2, 2, 1, 1});

  RationalPolynomial p8 =
      nvg::from_kk2_basis({BigRational(1), BigRational(1, 3), BigRational(1, 12)});
  CHECK(nvg::to_binomial_basis(p8) == std::vector<BigInt>{2, 4, 3, 1, 1});

  // x/2 is not integer-valued; that is a result, not an error.
  CHECK_FALSE(nvg::to_binomial_basis(poly({BigRational(0), BigRational(1, 2)})));
  CHECK_THROWS_AS(nvg::to_binomial_basis(RationalPolynomial{}), std::invalid_argument);
}

TEST_CASE("to_binomial_basis inverts a planted binomial combination") {
  std::mt19937_64 rng(2468);
  for (int trial = 0; trial < 100; ++trial) {
    int d = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<BigInt> c(d + 1);
    for (auto& x : c) x = std::uniform_int_distribution<long long>(-30, 30)(rng);
    if (c[0] == 0) c[0] = 1;  // keep the top term alive so deg p stays d

    RationalPolynomial p;
    for (int i = 0; i <= d; ++i) {
      RationalPolynomial term = binom_poly(d - i);
      if (p.coeffs.size() < term.coeffs.size()) p.coeffs.resize(term.coeffs.size());
      for (std::size_t j = 0; j < term.coeffs.size(); ++j)
        p.coeffs[j] += BigRational(c[i]) * term.coeffs[j];
    }
    auto back = nvg::to_binomial_basis(p);
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
}

TEST_CASE("to_kk2_basis, frozen examples") {
  RationalPolynomial p5 =
      nvg::from_kk2_basis({BigRational(1), BigRational(5, 12), BigRational(1, 24)});
  CHECK(nvg::to_kk2_basis(p5) ==
        std::vector<BigRational>{BigRational(1), BigRational(5, 12), BigRational(1, 24)});

  // Degree-1 polynomials and bare x^2 sit outside the span.
  CHECK_FALSE(nvg::to_kk2_basis(poly({BigRational(1), BigRational(1)})));
  CHECK_FALSE(nvg::to_kk2_basis(poly({BigRational(0), BigRational(0), BigRational(1)})));
  CHECK(nvg::to_kk2_basis(poly({BigRational(9)})) ==
        std::vector<BigRational>{BigRational(9)});
  CHECK_THROWS_AS(nvg::to_kk2_basis(RationalPolynomial{}), std::invalid_argument);
}

TEST_CASE("to_kk2_basis inverts from_kk2_basis on random data") {
  std::mt19937_64 rng(97531);
  for (int trial = 0; trial < 100; ++trial) {
    int d = std::uniform_int_distribution<int>(0, 5)(rng);
    std::vector<BigRational> q(d + 1);
    for (auto& x : q) {
      long long num = std::uniform_int_distribution<long long>(-20, 20)(rng);
      long long den = std::uniform_int_distribution<long long>(1, 12)(rng);
      x = BigRational(num, den);
    }
    if (q.back() == 0) q.back() = BigRational(1, 7);
    auto back = nvg::to_kk2_basis(nvg::from_kk2_basis(q));
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("check_hypotheses on a small batch") {
  std::vector<nvg::HypothesisReport> reports = nvg::check_hypotheses({2, 3, 4, 5, 6}, 7);
  REQUIRE(reports.size() == 5);

  const int expected_phi[] = {1, 2, 2, 4, 2};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].phi_n == expected_phi[i]);
    REQUIRE(reports[i].degree_observed.has_value());
    CHECK(*reports[i].degree_observed == reports[i].phi_n);
    CHECK(reports[i].degree_matches);
    CHECK(reports[i].polynomial_on_tested_range);
    CHECK(reports[i].binomial_c.has_value());
    CHECK(reports[i].integer_valued_checked_range == std::pair<int, int>(0, 7));
  }

  CHECK(reports[0].n == 2);
  CHECK_FALSE(reports[0].kk2_representable);
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i].kk2_representable);

  // Primes carry the engaged factorial check; composites leave it empty.
  REQUIRE(reports[0].leading_matches_factorial.has_value());
  CHECK(*reports[0].leading_matches_factorial);
  REQUIRE(reports[1].leading_matches_factorial.has_value());
  CHECK(*reports[1].leading_matches_factorial);
  CHECK_FALSE(reports[2].leading_matches_factorial.has_value());
  REQUIRE(reports[3].leading_matches_factorial.has_value());
  CHECK(*reports[3].leading_matches_factorial);
  CHECK_FALSE(reports[4].leading_matches_factorial.has_value());

  CHECK(reports[1].coincident_with == std::vector<int>{4, 6});
  CHECK(reports[2].coincident_with == std::vector<int>{3, 6});
  CHECK(reports[4].coincident_with == std::vector<int>{3, 4});
  CHECK(reports[0].coincident_with.empty());
  CHECK(reports[3].coincident_with.empty());

  CHECK(reports[1].interpolant ==
        nvg::from_kk2_basis({BigRational(1), BigRational(1, 2)}));
  CHECK(reports[3].kk2 ==
        std::vector<BigRational>{BigRational(1), BigRational(5, 12), BigRational(1, 24)});
}

TEST_CASE("check_hypotheses validates its depth requirement") {
  // phi(5) = 4 demands k_max >= 7.
  CHECK_THROWS_AS(nvg::check_hypotheses({5}, 6), std::invalid_argument);
  CHECK_THROWS_AS(nvg::check_hypotheses({}, 10), std::invalid_argument);
  CHECK_THROWS_AS(nvg::check_hypotheses({1}, 10), std::invalid_argument);
  CHECK_NOTHROW(nvg::check_hypotheses({5}, 7));
}
