#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_support.hpp"

using namespace zetaforge;
using ztest::close_abs;
using ztest::close_rel;
using ztest::num;

namespace {

// Σ_{k>=0} (-1)^k x^{2k+1} / (2k+1), exact, truncated once terms drop below 2^-bits.
ExactRational atan_series(const ExactRational& x, long bits) {
  ExactRational sum = 0;
  ExactRational power = x;
  const ExactRational x2 = x * x;
  const ExactRational cut = pow2(-bits);
  for (long k = 0;; ++k) {
    const ExactRational term = power / (2 * k + 1);
    if (term < cut) break;
    sum += (k % 2 == 0) ? term : ExactRational(-term);
    power *= x2;
  }
  return sum;
}

// Σ_{k>=0} x^{2k+1} / (2k+1) = atanh(x), exact, truncated below 2^-bits.
ExactRational atanh_series(const ExactRational& x, long bits) {
  ExactRational sum = 0;
  ExactRational power = x;
  const ExactRational x2 = x * x;
  const ExactRational cut = pow2(-bits);
  for (long k = 0;; ++k) {
    const ExactRational term = power / (2 * k + 1);
    if (term < cut) break;
    sum += term;
    power *= x2;
  }
  return sum;
}

}  // namespace

TEST_CASE("pi agrees with Machin's arctangent formula") {
  const ExactRational machin = 16 * atan_series(ExactRational(1, 5), 300) - 4 * atan_series(ExactRational(1, 239), 300);
  for (Bits prec : {8L, 53L, 128L, 256L}) {
    CHECK(close_abs(const_pi(prec), BigReal(machin, prec + 64), -prec + 2));
  }
  CHECK(const_pi(128).to_string(30) == "3.14159265358979323846264338328e0");
}

TEST_CASE("log 2 and log 3 agree with atanh series") {
  const ExactRational l2 = 2 * atanh_series(ExactRational(1, 3), 300);
  const ExactRational l3 = l2 + 2 * atanh_series(ExactRational(1, 5), 300);
  for (Bits prec : {16L, 128L, 256L}) {
    CHECK(close_abs(const_log(2, prec), BigReal(l2, prec + 64), -prec + 2));
    CHECK(close_abs(const_log(3, prec), BigReal(l3, prec + 64), -prec + 2));
  }
  CHECK_THROWS_AS(const_log(5, 64), DomainError);
  CHECK_THROWS_AS(const_log(1, 64), DomainError);
}

TEST_CASE("exact integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == ExactInteger("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow2(-3) == ExactRational(1, 8));
  CHECK(pow2(10) == 1024);
  CHECK(guard_bits(128, 1) == 160);
  CHECK(guard_bits(128, 1024) == 170);
  CHECK_THROWS_AS(factorial(kFactorialLimit + 1), std::invalid_argument);
}

TEST_CASE("gamma reference values") {
  CHECK(close_rel(gamma_real(num("0.5"), 128), sqrt(const_pi(192)), -124));
  // Γ(-3/2) = 4√π/3
  CHECK(close_rel(gamma_real(num("-1.5"), 128), num("2.3632718012073547030642233111215269104"), -120));
  // mpmath reference
  CHECK(close_rel(gamma_real(num("1e-5"), 96), num("99999.42279422556767349322922021799752791"), -60));
  CHECK_THROWS_AS(gamma_real(BigReal(0L, 64), 64), PoleError);
  CHECK_THROWS_AS(gamma_real(BigReal(-3L, 64), 64), PoleError);
}

TEST_CASE("gamma functional equations at random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(-7.5, 30.0);
  const Bits prec = 128;
  const BigReal pi = const_pi(192);
  for (int i = 0; i < 25; ++i) {
    const double xd = dist(rng);
    if (std::fabs(xd - std::round(xd)) < 1e-3 || std::fabs(2 * xd - std::round(2 * xd)) < 1e-3) continue;
    const BigReal x(xd, 192);
    CAPTURE(xd);
    // Γ(x+1) = x Γ(x)
    CHECK(close_rel(gamma_real(x + 1L, prec), x * gamma_real(x, prec + 8), -prec + 8));
    // Duplication: Γ(x) Γ(x+1/2) = 2^{1-2x} √π Γ(2x)
    const BigReal half(0.5, 192);
    const BigReal lhs = gamma_real(x, prec) * gamma_real(x + half, prec);
    const BigReal rhs = pow(2UL, 1L - 2L * x) * sqrt(pi) * gamma_real(2L * x, prec);
    CHECK(close_rel(lhs, rhs, -prec + 10));
    // Reflection: Γ(x) Γ(1-x) = π / sin(πx)
    CHECK(close_rel(gamma_real(x, prec) * gamma_real(1L - x, prec), pi / sin_pi(x), -prec + 10));
  }
}

TEST_CASE("gamma at integers matches factorial") {
  for (long n = 1; n <= 60; ++n) {
    CHECK(close_rel(gamma_real(BigReal(n, 64), 128), BigReal(factorial(static_cast<unsigned long>(n - 1)), 256), -124));
  }
}

TEST_CASE("rational_log_integral closed forms") {
  const RationalPolynomial one{ExactRational(1)};
  CHECK(rational_log_integral(one, 1, +1) == LogLinearValue{0, 1, 0});   // log 2
  CHECK(rational_log_integral(one, 2, +1) == LogLinearValue{0, -1, 1});  // log 3/2
  CHECK(rational_log_integral(one, 2, -1) == LogLinearValue{0, 1, 0});   // log 2
  const RationalPolynomial t = RationalPolynomial::monomial(1);
  CHECK(rational_log_integral(t, 1, +1) == LogLinearValue{1, -1, 0});  // 1 - log 2
  CHECK(rational_log_integral(RationalPolynomial{}, 1, +1) == LogLinearValue{0, 0, 0});

  CHECK_THROWS_AS(rational_log_integral(one, 3, +1), DomainError);
  CHECK_THROWS_AS(rational_log_integral(one, 1, -1), DomainError);
  CHECK_THROWS_AS(rational_log_integral(one, ExactRational(1, 2), +1), DomainError);
}

TEST_CASE("polynomial algebra") {
  const RationalPolynomial p{ExactRational(1), ExactRational(-2), ExactRational(1)};  // (1-t)^2
  const RationalPolynomial q{ExactRational(1), ExactRational(-1)};
  CHECK(q.pow(2) == p);
  CHECK(p.integral_unit() == ExactRational(1, 3));
  ExactRational rem;
  const RationalPolynomial quo = p.divide_linear(1, +1, rem);  // (1-t)^2 = (t-3)(1+t) + 4
  CHECK(rem == 4);
  CHECK(quo == RationalPolynomial{ExactRational(-3), ExactRational(1)});
  CHECK((p - p).is_zero());
  CHECK((p + q).degree() == 2);
  CHECK(p(ExactRational(1, 2)) == ExactRational(1, 4));
}

TEST_CASE("tanh-sinh matches exact log integrals for random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_int_distribution<int> kind(0, 2);
  const Bits prec = 128;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ExactRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    const RationalPolynomial p(c);
    const int k = kind(rng);
    const ExactRational cc = k == 0 ? 1 : 2;
    const int sign = k == 2 ? -1 : +1;
    const BigReal exact = rational_log_integral(p, cc, sign).to_bigreal(prec);
    const BigReal quad = tanh_sinh_quadrature(
        [&](const BigReal& t, const BigReal&) { return p(t) / (BigReal(cc, t.precision()) + sign * t); }, prec);
    CAPTURE(trial);
    CHECK(close_abs(quad, exact, -prec + 12));
  }
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  const Bits prec = 128;
  // ∫ t^{-1/2} = 2 and ∫ log(1-t) = -1
  const BigReal a = tanh_sinh_quadrature([](const BigReal& t, const BigReal&) { return 1L / sqrt(t); }, prec);
  CHECK(close_abs(a, BigReal(2L, 64), -prec + 12));
  const BigReal b = tanh_sinh_quadrature([](const BigReal&, const BigReal& u) { return log(u); }, prec);
  CHECK(close_abs(b, BigReal(-1L, 64), -prec + 12));
  const QuadratureResult r = tanh_sinh([](const BigReal& t, const BigReal&) { return t * t; }, 64);
  CHECK(r.levels >= 2);
  CHECK(r.levels <= kQuadratureMaxLevel);
}

TEST_CASE("LogLinearValue survives cancellation") {
  // a + log 2 with a a 100-bit truncation of -log 2 leaves ~2^-100.
  const BigReal l2 = const_log(2, 400);
  const ExactRational a = -floor(ldexp(l2, 100)).to_rational() * pow2(-100);
  const LogLinearValue v{a, 1, 0};
  const BigReal got = v.to_bigreal(64);
  const BigReal want = (l2 + BigReal(a, 400)).rounded(64);
  CHECK(close_rel(got, want, -60));
  LogLinearValue w{1, 2, 3};
  w *= ExactRational(1, 2);
  CHECK(w == LogLinearValue{ExactRational(1, 2), 1, ExactRational(3, 2)});
  CHECK((w - w) == LogLinearValue{0, 0, 0});
}

TEST_CASE("decimal strings round-trip at the stated precision") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (Bits prec : {8L, 53L, 128L, 333L}) {
    for (int i = 0; i < 20; ++i) {
      const BigReal x = BigReal(dist(rng), 64).rounded(prec) / BigReal(7L, prec);
      const BigReal back = BigReal::parse(x.to_string(), prec);
      CHECK(back == x);
    }
  }
  const ExactRational r(-691, 1024);
  CHECK(BigReal(r, 64).to_rational() == r);
  CHECK_THROWS_AS(BigReal::parse("1.5x", 64), std::invalid_argument);
  CHECK_THROWS_AS(BigReal::parse("", 64), std::invalid_argument);
}
