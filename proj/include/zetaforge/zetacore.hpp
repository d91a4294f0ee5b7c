#pragma once

#include "zetaforge/numkernel.hpp"

namespace zetaforge {

/// Parameters of one Euler–Maclaurin evaluation.
struct ZetaOracleConfig {
  unsigned long cutoff = 0;  ///< N: terms k < N are summed directly.
  unsigned long depth = 0;   ///< p: number of Bernoulli correction terms.
  Bits prec = 0;
  /// Certified bound on the Euler–Maclaurin remainder.
  double log2_remainder = 0.0;
};

/// Largest direct-sum cutoff zeta_em will accept.
inline constexpr unsigned long kZetaMaxCutoff = 1UL << 22;
inline constexpr unsigned long kZetaMaxDepth = 60;

/// p = min(ceil(prec/4), 60) and the least N >= 2p whose remainder bound
/// 4 |(s)_{2p}| / (2π)^{2p} N^{-(s+2p-1)} / (s+2p-1) is below 2^-(prec+1).
/// Throws PrecisionUnreachable if N would exceed kZetaMaxCutoff.
ZetaOracleConfig choose_em_parameters(const BigReal& s, Bits prec);

/// ζ(s) for real s >= 1/2, s != 1, by Euler–Maclaurin summation with a
/// certified remainder; absolute error <= 2^-prec. Uses Euler-produced
/// Bernoulli numbers.
BigReal zeta_em(const BigReal& s, Bits prec);

/// ζ(s) for s < 1/2 through ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s).
/// Exact zero at negative even integers, -1/2 at s = 0.
BigReal zeta_reflect(const BigReal& s, Bits prec);

/// Dispatches to zeta_reflect below 1/2 and zeta_em otherwise.
BigReal zeta(const BigReal& s, Bits prec);

/// zeta() memoized by (argument, prec).
BigReal zeta_cached(const BigReal& s, Bits prec);

/// ζ(s) - 1 for s >= 2 with absolute error <= 2^-prec.
BigReal zeta_minus_one(const BigReal& s, Bits prec);

/// ζ'(-2n) = (-1)^n Γ(2n+1) ζ(2n+1) / (2 (2π)^{2n}), n >= 1.
BigReal zeta_prime_neg_even(unsigned long n, Bits prec);

/// Central difference (ζ(s+h) - ζ(s-h)) / (2h), evaluated at
/// prec + 2|log2 h| + 32 bits.
BigReal zeta_prime_fd(const BigReal& s, Bits prec, const BigReal& h);

}  // namespace zetaforge
