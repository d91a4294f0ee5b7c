#include "zetaforge/zetacore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "zetaforge/bernoulli.hpp"
#include "zetaforge/memo_cache.hpp"

namespace zetaforge {

namespace {

double log2_em_remainder(double s, unsigned long depth, unsigned long cutoff) {
  // 4 |(s)_{2p}| / (2π)^{2p} * N^{-(s+2p-1)} / (s+2p-1)
  const double two_p = 2.0 * static_cast<double>(depth);
  double log2_rising = 0.0;
  for (unsigned long i = 0; i < 2 * depth; ++i) log2_rising += std::log2(std::fabs(s + static_cast<double>(i)));
  return 2.0 + log2_rising - two_p * std::log2(2.0 * std::numbers::pi) -
         (s + two_p - 1.0) * std::log2(static_cast<double>(cutoff)) - std::log2(s + two_p - 1.0);
}

BigReal pi_at(Bits bits) {
  BigReal pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  return pi;
}

MemoCache<std::pair<std::string, Bits>, BigReal>& zeta_memo() {
  static MemoCache<std::pair<std::string, Bits>, BigReal> cache;
  return cache;
}

}  // namespace

ZetaOracleConfig choose_em_parameters(const BigReal& s, Bits prec) {
  const double sd = s.to_double();
  ZetaOracleConfig config;
  config.prec = prec;
  config.depth = std::min<unsigned long>(static_cast<unsigned long>((prec + 3) / 4), kZetaMaxDepth);
  config.depth = std::max<unsigned long>(config.depth, 1);
  // Margin of two bits over the 2^-(prec+1) target absorbs the double evaluation.
  const double target = -static_cast<double>(prec) - 3.0;
  const double two_p = 2.0 * static_cast<double>(config.depth);
  const double at_one = log2_em_remainder(sd, config.depth, 1);
  double cutoff = std::exp2((at_one - target) / (sd + two_p - 1.0));
  cutoff = std::max(cutoff, two_p);
  if (!(cutoff <= static_cast<double>(kZetaMaxCutoff))) {
    throw PrecisionUnreachable("Euler-Maclaurin needs more than " + std::to_string(kZetaMaxCutoff) +
                               " direct terms for " + std::to_string(prec) + " bits");
  }
  config.cutoff = static_cast<unsigned long>(std::ceil(cutoff));
  while (log2_em_remainder(sd, config.depth, config.cutoff) > target) ++config.cutoff;
  config.log2_remainder = log2_em_remainder(sd, config.depth, config.cutoff);
  return config;
}

BigReal zeta_em(const BigReal& s, Bits prec) {
  if (s == 1L) throw PoleError("pole at s=1");
  if (s < BigReal(0.5, 8)) throw DomainError("zeta_em requires s >= 1/2");
  const ZetaOracleConfig config = choose_em_parameters(s, prec);
  const unsigned long n = config.cutoff;
  const Bits work = guard_bits(prec, n + config.depth);
  const BigReal sw = s.rounded(std::max(work, s.precision()));

  BigReal sum(work);
  BigReal term(work);
  BigReal neg_s = -sw;
  for (unsigned long k = n - 1; k >= 1; --k) {
    // Smallest terms first.
    mpfr_ui_pow(term.get(), k, neg_s.get(), MPFR_RNDN);
    sum += term;
  }

  BigReal n_real(static_cast<long>(n), work);
  BigReal n_pow = pow(n_real, neg_s);  // N^-s
  sum += n_pow * n_real / (sw - 1L);
  sum += ldexp(n_pow, -1);

  // Corrections B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}, j = 1..p.
  BigReal rising_over_power = sw / n_real;  // (s)_{2j-1} / N^{2j-1}
  const BigReal inv_n2 = 1L / (n_real * n_real);
  for (unsigned long j = 1; j <= config.depth; ++j) {
    const ExactRational coeff = bernoulli_euler(2 * j) / ExactRational(factorial(2 * j));
    sum += BigReal(coeff, work) * rising_over_power * n_pow;
    rising_over_power *= (sw + static_cast<long>(2 * j - 1)) * (sw + static_cast<long>(2 * j)) * inv_n2;
  }
  return sum.rounded(prec);
}

BigReal zeta_reflect(const BigReal& s, Bits prec) {
  if (!(s < BigReal(0.5, 8))) throw DomainError("zeta_reflect requires s < 1/2");
  if (s.is_zero()) return BigReal(-0.5, prec);
  if (s.is_integer() && floor(ldexp(s, -1)) == ldexp(s, -1)) return BigReal(prec);  // trivial zero

  const Bits work = guard_bits(prec, 8);
  const BigReal sw = s.rounded(std::max(work, s.precision()));
  const BigReal one_minus_s = 1L - sw;
  BigReal value = pow(2UL, sw.rounded(work));
  value *= pow(pi_at(work), (sw - 1L).rounded(work));
  value *= sin_pi(ldexp(sw, -1)).rounded(work);
  value *= gamma_real(one_minus_s, work);
  value *= zeta_em(one_minus_s, work);
  return value.rounded(prec);
}

BigReal zeta(const BigReal& s, Bits prec) {
  return s < BigReal(0.5, 8) ? zeta_reflect(s, prec) : zeta_em(s, prec);
}

BigReal zeta_cached(const BigReal& s, Bits prec) {
  auto key = std::make_pair(s.to_rational().get_str(), prec);
  return zeta_memo().get_or_compute(key, [&] { return zeta(s, prec); });
}

BigReal zeta_minus_one(const BigReal& s, Bits prec) {
  if (s < 2L) throw DomainError("zeta_minus_one requires s >= 2");
  const double sd = s.to_double();
  // Direct sum over k = 2..K when the tail K^{1-s}/(s-1) is already negligible.
  const double log2_k = (static_cast<double>(prec) + 2.0) / (sd - 1.0);
  if (log2_k < 6.0) {
    const unsigned long k_max = static_cast<unsigned long>(std::ceil(std::exp2(log2_k))) + 1;
    const Bits work = guard_bits(prec, k_max);
    BigReal sum(work);
    BigReal term(work);
    const BigReal neg_s = -s.rounded(std::max(work, s.precision()));
    for (unsigned long k = k_max; k >= 2; --k) {
      mpfr_ui_pow(term.get(), k, neg_s.get(), MPFR_RNDN);
      sum += term;
    }
    return sum.rounded(prec);
  }
  return (zeta_cached(s, prec + 8) - 1L).rounded(prec);
}

BigReal zeta_prime_neg_even(unsigned long n, Bits prec) {
  if (n == 0) throw DomainError("zeta_prime_neg_even requires n >= 1");
  const Bits work = guard_bits(prec, 2 * n);
  BigReal two_pi = ldexp(pi_at(work), 1);
  BigReal value = BigReal(factorial(2 * n), work) * zeta_em(BigReal(static_cast<long>(2 * n + 1), work), work);
  value /= ldexp(pow(two_pi, static_cast<long>(2 * n)), 1);
  if (n % 2 == 1) value = -value;
  return value.rounded(prec);
}

BigReal zeta_prime_fd(const BigReal& s, Bits prec, const BigReal& h) {
  if (!(h > 0L)) throw DomainError("zeta_prime_fd requires h > 0");
  const long log2_h = std::labs(h.exponent());
  const Bits work = prec + 2 * log2_h + 32;
  const BigReal sw = s.rounded(work);
  const BigReal hw = h.rounded(work);
  const BigReal upper = zeta(sw + hw, work);
  const BigReal lower = zeta(sw - hw, work);
  return ((upper - lower) / ldexp(hw, 1)).rounded(prec);
}

}  // namespace zetaforge
