#include "ovk/errors.hpp"
#include "ovk/psi_polynomial.hpp"
#include "ovk/rational.hpp"
#include "ovk/series.hpp"

#include <doctest.h>

#include <random>

using namespace ovk;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

TruncatedSeries poly(int lowest, std::vector<Rational> c, int order) { return TruncatedSeries(lowest, std::move(c), order); }

TruncatedSeries random_series(std::mt19937& rng, int lowest, int order, bool unit_leading) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> c;
  for (int k = lowest; k < order; ++k) c.push_back(Rational(num(rng), den(rng)));
  if (unit_leading && c.front().is_zero()) c.front() = Rational(1);
  return TruncatedSeries(lowest, std::move(c), order);
}

}  // namespace

TEST_CASE("rational stays in lowest terms and parses big integers") {
  CHECK(Rational(6, 8).str() == "3/4");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("-10/4") == q(-5, 2));
  const Rational big = Rational::parse("123456789012345678901234567890/3");
  CHECK(big.numerator_str() == "41152263004115226300411522630");
  CHECK(big.denominator_str() == "1");
  CHECK(Rational::from_parts("7", "5760") == q(7, 5760));
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidArgument);
  CHECK(q(2, 3).pow(-2) == q(9, 4));
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK(binomial(5, 2) == q(10));
  CHECK(binomial(-1, 3) == q(-1));
}

TEST_CASE("series_mul examples") {
  const auto a = poly(0, {q(1), q(1)}, 5);
  const auto b = poly(0, {q(1), q(-1)}, 5);
  const auto p = series_mul(a, b);
  CHECK(p == poly(0, {q(1), q(0), q(-1)}, 5));
  CHECK(p.order() == 5);

  const auto shifted = series_mul(TruncatedSeries::monomial(q(1), -2, 3), TruncatedSeries::monomial(q(1), 2, 7));
  CHECK(shifted.coeff(0) == q(1));
  CHECK(shifted.lowest() == 0);

  const auto c = poly(0, {q(1), q(1, 24)}, 4);
  const auto cc = series_mul(c, c);
  CHECK(cc == poly(0, {q(1), q(1, 12), q(1, 576)}, 4));
}

TEST_CASE("truncation order tracks the tightest window") {
  // (x^-1 + O(x^3)) * (1 + O(x^2)) is only known below x^1.
  const auto a = poly(-1, {q(1)}, 3);
  const auto b = poly(0, {q(1)}, 2);
  CHECK((a * b).order() == 1);
  CHECK_THROWS_AS((a * b).coeff(1), TruncationError);
  CHECK_THROWS_AS(b.truncated(5), TruncationError);
  CHECK(a.truncated(1).order() == 1);
  CHECK((a + b).order() == 2);
}

TEST_CASE("series_inverse examples") {
  const auto geometric = series_inverse(poly(0, {q(1), q(-1)}, 6));
  for (int k = 0; k < 6; ++k) CHECK(geometric.coeff(k) == q(1));

  // sin(u)/u -> u/sin(u) = 1 + u^2/6 + 7u^4/360 + 31u^6/15120
  const auto sinc = sin_series(q(1), 10).trimmed().shifted(-1);
  const auto inv = series_inverse(sinc);
  CHECK(inv.coeff(0) == q(1));
  CHECK(inv.coeff(2) == q(1, 6));
  CHECK(inv.coeff(4) == q(7, 360));
  CHECK(inv.coeff(6) == q(31, 15120));

  // 1/(2 sin(u/2)) = 1/u + u/24 + 7u^3/5760 + 31u^5/967680
  const auto two_sin = q(2) * sin_series(q(1, 2), 8).trimmed();
  const auto laurent = series_inverse(two_sin);
  CHECK(laurent.lowest() == -1);
  CHECK(laurent.coeff(-1) == q(1));
  CHECK(laurent.coeff(1) == q(1, 24));
  CHECK(laurent.coeff(3) == q(7, 5760));
  CHECK(laurent.coeff(5) == q(31, 967680));

  CHECK_THROWS_AS(series_inverse(poly(0, {q(0), q(1)}, 4)), ZeroLeadingCoefficient);
}

TEST_CASE("sin_series examples") {
  CHECK(sin_series(q(1), 6) == poly(0, {q(0), q(1), q(0), q(-1, 6), q(0), q(1, 120)}, 6));
  CHECK(sin_series(q(1, 2), 4) == poly(0, {q(0), q(1, 2), q(0), q(-1, 48)}, 4));
  CHECK(sin_series(q(0), 5).is_zero());
}

TEST_CASE("random series: ring axioms and inverse") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const int la = static_cast<int>(rng() % 5) - 2;
    const int lb = static_cast<int>(rng() % 5) - 2;
    const int lc = static_cast<int>(rng() % 3);
    const auto a = random_series(rng, la, la + 6, true);
    const auto b = random_series(rng, lb, lb + 7, true);
    const auto c = random_series(rng, lc, lc + 5, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    const auto one = a * a.inverse();
    CHECK(one.lowest() <= 0);
    for (int k = one.lowest(); k < one.order(); ++k) CHECK(one.coeff(k) == q(k == 0 ? 1 : 0));
    const auto lhs = a * (b + c);
    const auto rhs = a * b + a * c;
    CHECK(lhs.agrees_through(rhs, std::min(lhs.order(), rhs.order()) - 1));
  }
}

TEST_CASE("psi polynomial nilpotency and inverse") {
  const auto one = TruncatedSeries::monomial(q(1), 0, 6);
  const auto lam = TruncatedSeries::monomial(q(1), 1, 7);
  const auto p1 = PsiPolynomial::psi(3, 1, 0, one);
  const auto p2 = PsiPolynomial::psi(3, 1, 1, one);
  CHECK((p1 * p2).terms().empty());
  CHECK((p1 * p1).terms().empty());

  // (lambda - psi_1) under cap 2 inverts to lambda^-1 + psi_1 lambda^-2 + psi_1^2 lambda^-3.
  const auto node = PsiPolynomial::constant(1, 2, lam) - PsiPolynomial::psi(1, 2, 0, one);
  const auto inv = node.inverse();
  REQUIRE(inv.terms().size() == 3);
  CHECK(inv.terms().at({0}).coeff(-1) == q(1));
  CHECK(inv.terms().at({1}).coeff(-2) == q(1));
  CHECK(inv.terms().at({2}).coeff(-3) == q(1));
  const auto prod = node * inv;
  CHECK(prod.terms().size() == 1);
  CHECK(prod.constant_term().coeff(0) == q(1));

  CHECK_THROWS_AS(PsiPolynomial::psi(2, 1, 0, one).inverse(), ZeroLeadingCoefficient);
}

TEST_CASE("psi polynomial multiplication is commutative on random input") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    PsiPolynomial a(3, 2);
    PsiPolynomial b(3, 2);
    for (const PsiExponents& e : std::vector<PsiExponents>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}) {
      a.add_term(e, random_series(rng, 0, 4, false));
      b.add_term(e, random_series(rng, -1, 3, false));
    }
    const auto ab = a * b;
    CHECK(ab.str() == (b * a).str());
    for (const auto& [e, c] : ab.terms()) CHECK(total_degree(e) <= 2);
  }
}
