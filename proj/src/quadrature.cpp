#include <algorithm>

#include "zetaforge/numkernel.hpp"

namespace zetaforge {

namespace {

// Abscissae beyond this |u| carry weights far below any supported precision.
constexpr double kMaxAbscissa = 12.0;

// Contribution of the pair of nodes at +u and -u. Returns false once both
// nodes are negligible.
bool add_pair(const UnitIntegrand& f, const BigReal& u, const BigReal& half_pi, const BigReal& weight_cut,
              const BigReal& term_cut, BigReal& acc) {
  // t(u) = 1 / (1 + q), 1 - t(u) = q / (1 + q), q = exp(-2v), v = (π/2) sinh u.
  BigReal v = half_pi * sinh(u);
  BigReal q = exp(ldexp(-v, 1));
  BigReal one_plus_q = q + 1L;
  BigReal t_hi = 1L / one_plus_q;
  BigReal t_lo = q / one_plus_q;
  // dt/du = π cosh(u) q / (1 + q)^2, identical for the mirrored node.
  BigReal weight = ldexp(half_pi, 1) * cosh(u) * q / (one_plus_q * one_plus_q);
  BigReal upper = f(t_hi, t_lo) * weight;
  BigReal lower = f(t_lo, t_hi) * weight;
  acc += upper;
  acc += lower;
  return !(weight < weight_cut && abs(upper) < term_cut && abs(lower) < term_cut);
}

}  // namespace

QuadratureResult tanh_sinh(const UnitIntegrand& f, Bits prec) {
  const Bits work = guard_bits(prec, 1U << 16);
  BigReal half_pi(work);
  mpfr_const_pi(half_pi.get(), MPFR_RNDN);
  half_pi = ldexp(half_pi, -1);

  const BigReal weight_cut = exp2i(-prec - 16, 64);
  const BigReal half(0.5, work);

  // Level 0: step h = 1, nodes at every integer u.
  BigReal h(1L, work);
  BigReal center_weight = ldexp(half_pi, -1);
  BigReal level_sum = f(half, half) * center_weight;
  auto sweep = [&](const BigReal& step, long first, long stride, const BigReal& scale, BigReal& acc) {
    BigReal term_cut = ldexp(max(abs(scale), BigReal(1L, 64)), -prec - 24);
    for (long j = first;; j += stride) {
      BigReal u = step * j;
      if (u.to_double() > kMaxAbscissa) break;
      if (!add_pair(f, u, half_pi, weight_cut, term_cut, acc)) break;
    }
  };
  sweep(h, 1, 1, level_sum, level_sum);
  BigReal estimate = level_sum * h;

  const BigReal tolerance_unit = exp2i(-prec, 64);
  for (int level = 1; level <= kQuadratureMaxLevel; ++level) {
    h = ldexp(h, -1);
    BigReal odd_sum(work);
    // New nodes are the odd multiples of the halved step.
    sweep(h, 1, 2, estimate, odd_sum);
    BigReal next = ldexp(estimate, -1) + odd_sum * h;
    BigReal difference = abs(next - estimate);
    estimate = next;
    if (level >= 2 && difference <= tolerance_unit * max(abs(estimate), BigReal(1L, 64))) {
      return {estimate.rounded(prec), difference.rounded(64), level};
    }
  }
  throw NonConvergence("tanh-sinh quadrature did not converge within " + std::to_string(kQuadratureMaxLevel) +
                       " halvings");
}

BigReal tanh_sinh_quadrature(const UnitIntegrand& f, Bits prec) { return tanh_sinh(f, prec).value; }

}  // namespace zetaforge
