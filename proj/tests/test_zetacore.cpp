#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <thread>

#include "test_support.hpp"
#include "zetaforge/bernoulli.hpp"
#include "zetaforge/zetacore.hpp"

using namespace zetaforge;
using ztest::close_abs;
using ztest::close_rel;
using ztest::num;
using ztest::within;

namespace {

// Borwein's alternating-series algorithm for η(s), then ζ = η / (1 - 2^{1-s}).
// Error about 3 (3+√8)^-n, independent of Euler–Maclaurin.
BigReal zeta_borwein(const BigReal& s, Bits prec, long n = 80) {
  std::vector<ExactRational> d(static_cast<std::size_t>(n) + 1);
  ExactRational acc = 0;
  for (long i = 0; i <= n; ++i) {
    const auto ui = static_cast<unsigned long>(i);
    acc += ExactRational(factorial(static_cast<unsigned long>(n + i - 1)) * (ExactInteger(1) << (2 * ui)),
                         factorial(static_cast<unsigned long>(n - i)) * factorial(2 * ui));
    d[ui] = n * acc;
  }
  BigReal sum(0L, prec);
  for (long k = 0; k < n; ++k) {
    const BigReal term = BigReal(d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)], prec) /
                         pow(static_cast<unsigned long>(k + 1), s.rounded(prec));
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  const BigReal eta = -sum / BigReal(d[static_cast<std::size_t>(n)], prec);
  return eta / (1L - pow(2UL, (1L - s).rounded(prec)));
}

}  // namespace

TEST_CASE("Euler-Maclaurin matches the Borwein oracle at random s") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> dist(0.5, 12.0);
  int checked = 0;
  while (checked < 20) {
    const double sd = dist(rng);
    if (std::fabs(sd - 1.0) < 0.05) continue;
    const BigReal s(sd, 64);
    CAPTURE(sd);
    CHECK(close_abs(zeta_em(s, 128), zeta_borwein(s, 200), -124L));
    ++checked;
  }
}

TEST_CASE("reference values") {
  // mpmath references
  CHECK(close_abs(zeta(num("0.5"), 128), num("-1.4603545088095868128894991525152980124672"), -126L));
  CHECK(close_abs(zeta(num("1.5"), 128), num("2.6123753486854883433485675679240716305708"), -126L));
  CHECK(close_abs(zeta(BigReal(3L, 64), 192), num("1.2020569031595942853997381615114499907650"), -130L));
  CHECK(close_abs(zeta(BigReal(5L, 64), 128), num("1.0369277551433699263313654864570341680571"), -126L));
  CHECK(close_abs(zeta(BigReal(12L, 64), 128), BigReal(zeta_even_rational(6), 256) * pow(const_pi(256), 12L), -124L));
}

TEST_CASE("reflection at negative odd integers matches Bernoulli values") {
  for (unsigned long n = 1; n <= 10; ++n) {
    const BigReal s(1L - 2L * static_cast<long>(n), 64);
    CAPTURE(n);
    CHECK(close_rel(zeta_reflect(s, 128), BigReal(zeta_neg_odd_exact(n), 256), -120L));
  }
}

TEST_CASE("exact special values below 1/2") {
  CHECK(zeta(BigReal(0L, 64), 64) == BigReal(-0.5, 64));
  for (long n = 1; n <= 5; ++n) CHECK(zeta(BigReal(-2 * n, 64), 64).is_zero());
  // Functional equation at a non-integer point against the Borwein oracle.
  const BigReal s = num("-2.75");
  const BigReal rhs = pow(2UL, s) * pow(const_pi(200), s - 1L) * sin_pi(ldexp(s, -1)) *
                      gamma_real(1L - s, 200) * zeta_borwein(1L - s, 200);
  CHECK(close_rel(zeta_reflect(s, 128), rhs, -118L));
}

TEST_CASE("zeta is decreasing and above one on (1, inf)") {
  BigReal prev = zeta(num("1.05", 64), 64);
  for (const char* x : {"1.1", "1.5", "2", "2.5", "3", "4.5", "7", "10", "20", "40"}) {
    const BigReal v = zeta(num(x, 64), 64);
    CAPTURE(x);
    CHECK(v < prev);
    CHECK(v > 1L);
    prev = v;
  }
}

TEST_CASE("zeta minus one keeps relative accuracy") {
  for (long s : {2L, 7L, 30L, 100L}) {
    const BigReal direct = zeta(BigReal(s, 64), 128 + s) - 1L;
    CAPTURE(s);
    CHECK(close_abs(zeta_minus_one(BigReal(s, 64), 128), direct, -126L));
  }
  CHECK(zeta_minus_one(BigReal(100L, 64), 160) > 0L);
}

TEST_CASE("derivative at negative even integers") {
  // mpmath references
  CHECK(close_abs(zeta_prime_neg_even(1, 128), num("-0.030448457058393270780251530471154776647"), -126L));
  CHECK(close_abs(zeta_prime_neg_even(2, 128), num("0.0079838114502686242806966707987893039052"), -126L));
  CHECK(close_abs(zeta_prime_neg_even(3, 128), num("-0.0058997591435159374506298774083920255798"), -126L));
  // -ζ(3)/(4π²)
  const BigReal pi = const_pi(192);
  CHECK(close_abs(zeta_prime_neg_even(1, 128), -zeta(BigReal(3L, 64), 192) / (4L * pi * pi), -126L));
}

TEST_CASE("finite differences converge at second order") {
  for (unsigned long n = 1; n <= 3; ++n) {
    const BigReal s(-2L * static_cast<long>(n), 64);
    const BigReal exact = zeta_prime_neg_even(n, 128);
    const double e1 = abs(zeta_prime_fd(s, 128, num("1e-2")) - exact).to_double();
    const double e2 = abs(zeta_prime_fd(s, 128, num("1e-3")) - exact).to_double();
    const double order = std::log10(e1 / e2);
    CAPTURE(n);
    CAPTURE(order);
    CHECK(order >= 1.9);
  }
  CHECK(within(zeta_prime_fd(BigReal(-2L, 64), 128, num("1e-10")), zeta_prime_neg_even(1, 128), 1e-12));
  // ζ'(2), mpmath reference
  CHECK(within(zeta_prime_fd(BigReal(2L, 64), 128, num("1e-10")),
                  num("-0.93754825431584375370257409456786497790"), 1e-12));
}

TEST_CASE("parameter choice and errors") {
  const ZetaOracleConfig cfg = choose_em_parameters(num("2.5"), 128);
  CHECK(cfg.depth == 32);
  CHECK(cfg.cutoff >= 2 * cfg.depth);
  CHECK(cfg.log2_remainder <= -129.0);
  CHECK_THROWS_AS(zeta_em(BigReal(1L, 64), 64), PoleError);
  CHECK_THROWS_AS(zeta(BigReal(1L, 64), 64), PoleError);
  CHECK_THROWS_AS(zeta_em(num("0.25"), 64), DomainError);
  CHECK_THROWS_AS(choose_em_parameters(num("0.5"), 16384), PrecisionUnreachable);
}

TEST_CASE("memoized zeta is consistent across threads") {
  const BigReal s = num("3.3", 128);
  const BigReal want = zeta(s, 128);
  std::vector<int> ok(6, 0);
  std::vector<std::thread> threads;
  for (int t = 0; t < 6; ++t) {
    threads.emplace_back([&, t] { ok[static_cast<std::size_t>(t)] = zeta_cached(s, 128) == want ? 1 : 0; });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
}
