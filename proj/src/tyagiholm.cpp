#include "zetaforge/tyagiholm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "zetaforge/bernoulli.hpp"
#include "zetaforge/memo_cache.hpp"
#include "zetaforge/zetacore.hpp"

namespace zetaforge {

namespace {

constexpr double kNearIntegerGuard = 1e-3;
constexpr Bits kBoundBits = 64;

BigReal pi_at(Bits bits) {
  BigReal pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  return pi;
}

BigReal log2_at(Bits bits) {
  BigReal r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

// Pads a bound computed in low precision so rounding can only enlarge it.
BigReal inflate(const BigReal& bound) { return bound.rounded(kBoundBits) * BigReal(1.0 + 0x1p-40, kBoundBits); }

BigReal rounding_allowance(const BigReal& value, Bits prec) {
  return ldexp(max(abs(value).rounded(kBoundBits), exp2i(-prec, kBoundBits)), -prec + 1);
}

// ζ(2n) inside series at working precision. Once 3·4^{-n} is below the
// working ulp the value is taken as 1; the caller budgets that error.
BigReal zeta_even_term(unsigned long n, Bits work) {
  if (2 * n > static_cast<unsigned long>(work) + 4) return BigReal(1L, work);
  return zeta_even_closed(n, work);
}

// ζ(2n) - 1 with absolute error about 2^-work.
BigReal zeta_even_delta(unsigned long n, Bits work) {
  if (2 * n > static_cast<unsigned long>(work) + 4) return BigReal(work);
  return zeta_even_closed(n, work + 8) - 1L;
}

// Target on the series when the value is prefactor * series.
BigReal series_epsilon(const EvalStrategy& strategy, const BigReal& prefactor) {
  return strategy.epsilon.rounded(kBoundBits) / abs(prefactor).rounded(kBoundBits);
}

struct OddMemoKey {
  unsigned long m;
  Bits prec;
  std::string epsilon;
  unsigned long max_terms;
  auto operator<=>(const OddMemoKey&) const = default;
};

MemoCache<OddMemoKey, SeriesResult>& odd_memo() {
  static MemoCache<OddMemoKey, SeriesResult> cache;
  return cache;
}

}  // namespace

std::string_view to_string(StrategyTag tag) { return tag == StrategyTag::direct ? "direct" : "accelerated"; }

std::string_view to_string(OddZetaForm form) { return form == OddZetaForm::eq9 ? "eq9" : "eq13a"; }

EvalStrategy EvalStrategy::accelerated(Bits prec, unsigned long max_terms) {
  return {StrategyTag::accelerated, exp2i(-prec, kBoundBits), max_terms};
}

EvalStrategy EvalStrategy::direct(BigReal epsilon, unsigned long max_terms) {
  if (!(epsilon > 0L)) throw DomainError("strategy epsilon must be positive");
  if (max_terms == 0) throw DomainError("strategy max_terms must be positive");
  return {StrategyTag::direct, std::move(epsilon), max_terms};
}

// ---------------------------------------------------------------------------

LogLinearValue baseline_g(unsigned long m) {
  if (m == 0) throw DomainError("baseline_g requires m >= 1");
  // (1 - t)^{2m} t over (1 + t).
  const RationalPolynomial numerator =
      RationalPolynomial{ExactRational(1), ExactRational(-1)}.pow(static_cast<unsigned>(2 * m)) *
      RationalPolynomial::monomial(1);
  LogLinearValue integral = rational_log_integral(numerator, ExactRational(1), +1);
  return integral * ExactRational(1, factorial(2 * m + 1));
}

// ---------------------------------------------------------------------------

SeriesResult tyagi_holm_general(const BigReal& s, Bits prec, const EvalStrategy& strategy) {
  if (!(s > 0L)) throw DomainError("series representation requires s > 0");
  if (s == 1L) throw PoleError("pole at s=1");
  const double sd = s.to_double();
  if (std::fabs(sd - std::round(sd)) < kNearIntegerGuard) {
    throw NearIntegerError("s=" + s.to_string(17) + " is within 1e-3 of an integer; use the integer-argument forms");
  }

  const unsigned long head = static_cast<unsigned long>(std::ceil((sd + 1.0) / 2.0)) + 1;  // n0
  const Bits work = guard_bits(prec, 1U << 12) + 32 + static_cast<Bits>(2.0 * sd);
  const BigReal sw = s.rounded(std::max(work, s.precision()));
  const BigReal pi = pi_at(work);

  const BigReal prefactor =
      pow(pi, (sw - 1L).rounded(work)) * sin_pi(ldexp(sw, -1)).rounded(work) / (1L - pow(2UL, (1L - sw).rounded(work)));
  const BigReal eps_series = series_epsilon(strategy, prefactor);

  // ratio_n = Γ(2n-s+1)/Γ(2n+2), advanced by (2n+1-s)(2n+2-s)/((2n+2)(2n+3)).
  BigReal ratio = gamma_real((3L - sw).rounded(work), work) / 6L;
  auto weight = [&](unsigned long n) { return 2L - pow(2UL, (sw - static_cast<long>(2 * n)).rounded(work)); };
  auto advance = [&](unsigned long n) {
    const long a = static_cast<long>(2 * n + 1);
    ratio *= ((a - sw) * (a + 1L - sw)) / BigReal(static_cast<long>((2 * n + 2) * (2 * n + 3)), work);
  };
  auto argument = [&](unsigned long n) { return (static_cast<long>(2 * n + 1) - sw).rounded(work); };

  SeriesResult result;
  result.method = strategy.tag;
  BigReal sum(work);
  unsigned long n = 1;

  if (strategy.tag == StrategyTag::direct) {
    // Tail after N terms (N >= n0, so every remaining ζ argument is >= 2):
    // Γ(x)/Γ(x+s+1) <= x^{-(s+1)} e^{(s+1)/x} by log-convexity of Γ, hence
    // sum_{n>N} |term| <= 2 Z e^{(s+1)/x_{N+1}} (2N-s+1)^{-s} / (2s).
    const BigReal s_low = s.rounded(kBoundBits);
    auto tail_after = [&](unsigned long count) {
      const BigReal x_next = BigReal(static_cast<long>(2 * count + 3), kBoundBits) - s_low;
      const BigReal zeta_cap = 1L + 3L * pow(4UL, BigReal(-static_cast<long>(count + 1), kBoundBits) + ldexp(s_low, -1));
      const BigReal growth = exp((s_low + 1L) / x_next);
      const BigReal base = BigReal(static_cast<long>(2 * count + 1), kBoundBits) - s_low;
      return inflate(2L * zeta_cap * growth * pow(base, -s_low) / ldexp(s_low, 1));
    };
    BigReal tail;
    for (;; ++n) {
      const BigReal term = weight(n) * ratio * zeta_cached(argument(n), work);
      sum += term;
      if (n >= head) {
        tail = tail_after(n);
        if ((abs(term) < eps_series && tail < eps_series) || n >= strategy.max_terms) break;
      }
      advance(n);
    }
    result.terms_used = n;
    result.value = (prefactor * sum).rounded(prec);
    result.tail_bound = inflate(abs(prefactor).rounded(kBoundBits) * tail) + rounding_allowance(result.value, prec);
    return result;
  }

  // Accelerated: exact-oracle head, then ζ = 1 + δ for n > n0.
  for (; n <= head; ++n) {
    sum += weight(n) * ratio * zeta_cached(argument(n), work);
    advance(n);
  }
  // δ-part: |(2 - 2^{s-2n}) ratio_n δ_n| <= 2 ratio_n 3·4^{-n+s/2}, ratio_n decreasing.
  const BigReal four_s_half = pow(4UL, ldexp(s.rounded(kBoundBits), -1));
  BigReal delta_tail;
  for (;; ++n) {
    sum += weight(n) * ratio * zeta_minus_one(argument(n), work);
    advance(n);  // ratio now belongs to n + 1
    delta_tail = inflate(8L * abs(ratio).rounded(kBoundBits) * four_s_half *
                         exp2i(-2 * static_cast<long>(n + 1), kBoundBits));
    if (delta_tail < eps_series || n >= strategy.max_terms) break;
  }
  result.terms_used = n;

  // Baseline sum_{n>n0} (2 - 2^{s-2n}) Γ(2n-s+1)/Γ(2n+2) through the Beta integral
  // (1/Γ(s+1)) ∫₀¹ t^{K-s} (1-t)^s [2/(1-t²) - 2^{s-K}/(1-t²/4)] dt, K = 2n0+2.
  const long big_k = static_cast<long>(2 * head + 2);
  const BigReal exponent_t = (big_k - sw).rounded(work);
  const BigReal exponent_u = (sw - 1L).rounded(work);
  const BigReal scale = pow(2UL, (sw - big_k).rounded(work));
  const UnitIntegrand integrand = [&](const BigReal& t, const BigReal& u) {
    const BigReal t_power = pow(t, exponent_t);
    const BigReal u_power = pow(u, exponent_u);  // (1-t)^{s-1}
    const BigReal first = 2L * u_power / (1L + t);
    const BigReal second = scale * u_power * u / (1L - ldexp(t * t, -2));
    return t_power * (first - second);
  };
  const QuadratureResult quad = tanh_sinh(integrand, work - 16);
  const BigReal gamma_s1 = gamma_real((sw + 1L).rounded(work), work);
  sum += quad.value.rounded(work) / gamma_s1;

  result.value = (prefactor * sum).rounded(prec);
  const BigReal quad_error = quad.last_difference.rounded(kBoundBits) / abs(gamma_s1).rounded(kBoundBits);
  result.tail_bound = inflate(abs(prefactor).rounded(kBoundBits) * (delta_tail + quad_error)) +
                      rounding_allowance(result.value, prec);
  return result;
}

// ---------------------------------------------------------------------------

SeriesResult log2_identity_residual(Bits prec, const EvalStrategy& strategy) {
  const Bits work = guard_bits(prec, strategy.max_terms);
  const BigReal eps = strategy.epsilon.rounded(kBoundBits);
  SeriesResult result;
  result.method = strategy.tag;
  BigReal sum(work);
  BigReal quarter_power(1L, work);  // 4^{-n}
  BigReal tail;
  unsigned long n = 1;

  if (strategy.tag == StrategyTag::direct) {
    for (;; ++n) {
      quarter_power = ldexp(quarter_power, -2);
      const BigReal zeta_2n = zeta_even_term(n, work);
      const BigReal term = (1L - quarter_power) * zeta_2n / BigReal(static_cast<long>(n * (2 * n + 1)), work);
      sum += term;
      // sum_{n>N} (1-4^{-n}) ζ(2n) / (n(2n+1)) <= (1 + 3·4^{-N-1}) / (2N)
      tail = inflate((1L + 3L * exp2i(-2 * static_cast<long>(n + 1), kBoundBits)) /
                     BigReal(static_cast<long>(2 * n), kBoundBits));
      if ((abs(term) < eps && tail < eps) || n >= strategy.max_terms) break;
    }
  } else {
    // Subtract sum 1/(n(2n+1)) = 2 - 2 log 2; the remaining summands decay like 4^{-n}.
    const LogLinearValue baseline{ExactRational(2), ExactRational(-2), ExactRational(0)};
    result.baseline = baseline;
    sum += baseline.to_bigreal(work);
    for (;; ++n) {
      quarter_power = ldexp(quarter_power, -2);
      const BigReal delta = zeta_even_delta(n, work);
      // (1 - 4^{-n}) ζ(2n) - 1 = δ_n - 4^{-n} (1 + δ_n); both parts lie in [0, 3·4^{-n}].
      const BigReal numerator = delta - quarter_power * (1L + delta);
      sum += numerator / BigReal(static_cast<long>(n * (2 * n + 1)), work);
      tail = inflate(4L * exp2i(-2 * static_cast<long>(n + 1), kBoundBits) /
                     BigReal(static_cast<long>((n + 1) * (2 * n + 3)), kBoundBits));
      if (tail < eps || n >= strategy.max_terms) break;
    }
  }
  result.terms_used = n;
  result.value = (sum - log2_at(work)).rounded(prec);
  result.tail_bound = tail + exp2i(-prec + 1, kBoundBits);
  return result;
}

// ---------------------------------------------------------------------------

ExactRational zeta_even_series_rational(unsigned long m) {
  if (m == 0) throw DomainError("zeta_even_series requires m >= 1");
  const long two_m = static_cast<long>(2 * m);
  ExactRational bracket = -ExactRational(1, factorial(2 * m + 1));
  for (unsigned long n = 1; n + 1 <= m; ++n) {
    const ExactRational weight = ExactRational(2) - pow2(two_m - static_cast<long>(2 * n));
    // ζ(2n-2m+1) = ζ(1 - 2(m-n))
    const ExactRational zeta_value = zeta_neg_odd_exact(m - n);
    bracket += weight * zeta_value / ExactRational(factorial(2 * n + 1) * factorial(2 * (m - n) - 1));
  }
  ExactRational prefactor = ExactRational(1) / (ExactRational(2) * (ExactRational(1) - pow2(1 - two_m)));
  if (m % 2 == 1) prefactor = -prefactor;
  return prefactor * bracket;
}

BigReal zeta_even_series(unsigned long m, Bits prec) {
  const ExactRational r = zeta_even_series_rational(m);
  const Bits work = guard_bits(prec, 2 * m);
  return (BigReal(r, work) * pow(pi_at(work), static_cast<long>(2 * m))).rounded(prec);
}

// ---------------------------------------------------------------------------

SeriesResult odd_zeta_tail_series(unsigned long m, Bits prec, const EvalStrategy& strategy) {
  if (m == 0) throw DomainError("odd-argument series requires m >= 1");
  const Bits work = guard_bits(prec, strategy.max_terms);
  const BigReal eps = strategy.epsilon.rounded(kBoundBits);
  SeriesResult result;
  result.method = strategy.tag;

  // r_n = Γ(2n)/Γ(2m+2n+2), r_1 = 1/(2m+3)!, r_{n+1} = r_n (2n)(2n+1) / ((2m+2n+2)(2m+2n+3)).
  BigReal ratio = BigReal(ExactRational(1, factorial(2 * m + 3)), work);
  auto advance = [&](unsigned long n) {
    const long a = static_cast<long>(2 * n);
    const long b = static_cast<long>(2 * m + 2 * n + 2);
    ratio *= BigReal(a * (a + 1), work) / BigReal(b * (b + 1), work);
  };
  BigReal sum(work);
  BigReal quarter_power(1L, work);
  BigReal tail;
  unsigned long n = 1;

  if (strategy.tag == StrategyTag::direct) {
    const long a = static_cast<long>(2 * m + 2);
    for (;; ++n) {
      quarter_power = ldexp(quarter_power, -2);
      const BigReal term = (2L - ldexp(quarter_power, 1)) * ratio * zeta_even_term(n, work);
      sum += term;
      // 2 (1 + 3·4^{-N-1}) sum_{n>N} (2n)^{-a} <= 2 (1 + 3·4^{-N-1}) (2N)^{1-a} / (2(a-1))
      const BigReal two_n(static_cast<long>(2 * n), kBoundBits);
      tail = inflate(2L * (1L + 3L * exp2i(-2 * static_cast<long>(n + 1), kBoundBits)) * pow(two_n, 1 - a) /
                     BigReal(2 * (a - 1), kBoundBits));
      if ((abs(term) < eps && tail < eps) || n >= strategy.max_terms) break;
      advance(n);
    }
  } else {
    // (2 - 2^{1-2n}) ζ(2n) = 2 + (2δ_n - 2^{1-2n} ζ(2n)), the bracket bounded by 6·4^{-n}.
    const LogLinearValue baseline = baseline_g(m) * ExactRational(2);
    result.baseline = baseline;
    sum += baseline.to_bigreal(work);
    for (;; ++n) {
      quarter_power = ldexp(quarter_power, -2);
      const BigReal delta = zeta_even_delta(n, work);
      const BigReal correction = ldexp(delta, 1) - ldexp(quarter_power, 1) * (1L + delta);
      sum += ratio * correction;
      advance(n);  // ratio now r_{n+1}
      tail = inflate(8L * ratio.rounded(kBoundBits) * exp2i(-2 * static_cast<long>(n + 1), kBoundBits));
      if (tail < eps || n >= strategy.max_terms) break;
    }
  }
  result.terms_used = n;
  result.value = sum.rounded(prec);
  result.tail_bound = tail + rounding_allowance(result.value, prec);
  return result;
}

SeriesResult zeta_odd_series(unsigned long m, Bits prec, OddZetaForm form, const EvalStrategy& strategy) {
  if (m == 0) throw DomainError("zeta_odd_series requires m >= 1");
  const long two_m = static_cast<long>(2 * m);
  // π^{2m} amplifies errors in the bracket.
  const Bits work = guard_bits(prec, 64) + static_cast<Bits>(std::ceil(2.0 * static_cast<double>(m) * 1.6515)) + 16;
  const BigReal pi = pi_at(work);
  const BigReal pi2 = pi * pi;
  const BigReal one_minus_4m = BigReal(ExactRational(1) - pow2(-two_m), work);
  BigReal prefactor = pow(pi, two_m) / one_minus_4m;
  if (m % 2 == 1) prefactor = -prefactor;

  EvalStrategy inner = strategy;
  inner.epsilon = ldexp(series_epsilon(strategy, prefactor), -2);
  const SeriesResult series = odd_zeta_tail_series(m, work, inner);

  BigReal bracket = series.value - log2_at(work) / BigReal(factorial(2 * m + 1), work);
  BigReal extra_tail(kBoundBits);
  BigReal value(work);

  if (form == OddZetaForm::eq9) {
    for (unsigned long n = 1; n + 1 <= m; ++n) {
      const ExactRational weight = ExactRational(2) - pow2(1 + two_m - static_cast<long>(2 * n));
      const BigReal derivative = zeta_prime_neg_even(m - n, work);  // ζ'(2n-2m)
      bracket += BigReal(weight / ExactRational(factorial(2 * n + 1) * factorial(2 * (m - n))), work) * derivative;
    }
    value = prefactor * bracket;
  } else {
    value = prefactor * bracket;
    BigReal finite(work);
    BigReal minus_pi2_power(1L, work);
    for (unsigned long n = 1; n + 1 <= m; ++n) {
      minus_pi2_power *= -pi2;
      const ExactRational weight = pow2(static_cast<long>(2 * n) - two_m) - ExactRational(1);
      const BigReal coefficient = BigReal(weight / ExactRational(factorial(2 * n + 1)), work) * minus_pi2_power;
      // Lower odd values come from this same form, memoized.
      const SeriesResult lower = strategy.tag == StrategyTag::accelerated
                                     ? odd_memo().get_or_compute(
                                           OddMemoKey{m - n, work, strategy.epsilon.to_string(), strategy.max_terms},
                                           [&] { return zeta_odd_series(m - n, work, form, strategy); })
                                     : zeta_odd_series(m - n, work, form, strategy);
      finite += coefficient * lower.value;
      extra_tail += abs(coefficient).rounded(kBoundBits) * lower.tail_bound;
    }
    value += finite / one_minus_4m;
    extra_tail = extra_tail / one_minus_4m.rounded(kBoundBits);
  }

  SeriesResult result;
  result.method = strategy.tag;
  result.terms_used = series.terms_used;
  result.baseline = series.baseline;
  result.value = value.rounded(prec);
  result.tail_bound = inflate(abs(prefactor).rounded(kBoundBits) * series.tail_bound + extra_tail) +
                      rounding_allowance(result.value, prec);
  return result;
}

// ---------------------------------------------------------------------------

SeriesResult reordered_identity_residual(unsigned long m, Bits prec, const EvalStrategy& strategy) {
  if (m == 0) throw DomainError("reordered identity requires m >= 1");
  const Bits work = guard_bits(prec, 64) + 16;
  // LHS = -(1/2) sum_{k>=1} (2 - 2^{1-2k}) Γ(2k) ζ(2k) / Γ(2m+2k+2).
  EvalStrategy inner = strategy;
  inner.epsilon = ldexp(strategy.epsilon.rounded(kBoundBits), 1);
  const SeriesResult series = odd_zeta_tail_series(m, work, inner);
  const BigReal lhs = -ldexp(series.value, -1);

  const BigReal pi = pi_at(work);
  const BigReal pi2 = pi * pi;
  BigReal rhs(work);
  BigReal pi_power(1L, work);
  for (unsigned long n = 0; n < m; ++n) {
    pi_power *= pi2;  // π^{2(n+1)}
    const ExactRational weight = pow2(-2 * static_cast<long>(n) - 2) - ExactRational(1);
    ExactRational coefficient = weight / ExactRational(factorial(2 * (m - n) - 1));
    if (n % 2 == 1) coefficient = -coefficient;
    const BigReal zeta_odd = zeta_em(BigReal(static_cast<long>(2 * n + 3), work), work);
    rhs += BigReal(coefficient, work) * zeta_odd / pi_power;
  }
  rhs = -ldexp(rhs, -1) - log2_at(work) / BigReal(ExactInteger(2 * factorial(2 * m + 1)), work);

  SeriesResult result;
  result.method = strategy.tag;
  result.terms_used = series.terms_used;
  result.baseline = series.baseline;
  result.value = (lhs - rhs).rounded(prec);
  result.tail_bound =
      inflate(ldexp(series.tail_bound, -1)) + rounding_allowance(max(abs(lhs), abs(rhs)), prec);
  return result;
}

}  // namespace zetaforge
