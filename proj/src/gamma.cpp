#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "zetaforge/numkernel.hpp"

namespace zetaforge {

namespace {

// Stirling coefficients B_{2k} / (2k (2k - 1)), k = 1.., derived from tangent
// numbers (integer-only recurrence), independent of the bernoulli module.
class StirlingCoefficients {
 public:
  /// Returns a snapshot holding at least `count` coefficients.
  std::vector<ExactRational> get(std::size_t count) {
    {
      std::shared_lock lock(mutex_);
      if (coefficients_.size() >= count) {
        return {coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(count)};
      }
    }
    std::unique_lock lock(mutex_);
    if (coefficients_.size() < count) extend(std::max(count, 2 * coefficients_.size()));
    return {coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(count)};
  }

 private:
  void extend(std::size_t n) {
    // Tangent numbers T_1..T_n.
    std::vector<ExactInteger> tangent(n + 1);
    tangent[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) tangent[k] = static_cast<unsigned long>(k - 1) * tangent[k - 1];
    for (std::size_t k = 2; k <= n; ++k) {
      for (std::size_t j = k; j <= n; ++j) {
        tangent[j] = static_cast<unsigned long>(j - k) * tangent[j - 1] + static_cast<unsigned long>(j - k + 2) * tangent[j];
      }
    }
    coefficients_.clear();
    coefficients_.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
      // B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
      ExactInteger four_k = ExactInteger(1) << static_cast<mp_bitcnt_t>(2 * k);
      ExactRational b(ExactInteger(2 * k) * tangent[k], four_k * (four_k - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      ExactRational coeff = b / ExactRational(ExactInteger(2 * k) * ExactInteger(2 * k - 1));
      coefficients_.push_back(coeff);
    }
  }

  std::shared_mutex mutex_;
  std::vector<ExactRational> coefficients_;
};

StirlingCoefficients& stirling_table() {
  static StirlingCoefficients table;
  return table;
}

// log Γ(y) for y >= threshold, absolute error about 2^-work.
BigReal log_gamma_stirling(const BigReal& y, Bits work) {
  BigReal pi(work);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigReal half_log_two_pi = ldexp(log(ldexp(pi, 1)), -1);
  BigReal acc = (y - BigReal(0.5, work)) * log(y) - y + half_log_two_pi;

  const BigReal eps = exp2i(-work, 64);
  const BigReal inv_y2 = 1L / (y * y);
  BigReal power = 1L / y;  // y^-(2k-1)
  std::size_t count = 32;
  std::vector<ExactRational> coeffs = stirling_table().get(count);
  BigReal previous_magnitude;
  bool have_previous = false;
  for (std::size_t k = 0;; ++k) {
    if (k >= coeffs.size()) {
      count *= 2;
      coeffs = stirling_table().get(count);
    }
    BigReal term = BigReal(coeffs[k], work) * power;
    BigReal magnitude = abs(term);
    // The remainder after k terms is bounded by the magnitude of the next term.
    if (magnitude < eps) break;
    if (have_previous && magnitude > previous_magnitude) {
      throw PrecisionUnreachable("Stirling series diverged before reaching the target precision");
    }
    acc += term;
    previous_magnitude = magnitude;
    have_previous = true;
    power *= inv_y2;
  }
  return acc;
}

}  // namespace

BigReal gamma_real(const BigReal& x, Bits prec) {
  if (!x.is_finite()) throw DomainError("gamma_real of a non-finite argument");
  if (x.is_integer() && x <= 0L) {
    throw PoleError("gamma pole at non-positive integer " + x.to_string(20));
  }
  if (x.is_integer() && x <= 100000L) {
    return BigReal(factorial(static_cast<unsigned long>(x.to_long_round() - 1)), prec);
  }

  if (x < BigReal(0.5, 8)) {
    // Γ(x) = π / (sin(πx) Γ(1 - x)).
    const Bits work = guard_bits(prec, 4);
    BigReal xw = x.rounded(work + std::max<long>(x.exponent(), 0));
    BigReal denom = sin_pi(xw).rounded(work) * gamma_real(1L - xw, work);
    BigReal pi(work);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    return (pi / denom).rounded(prec);
  }

  const double threshold = 20.0 + static_cast<double>(prec) / 8.0;
  const double xd = x.to_double();
  const unsigned long shift = xd >= threshold ? 0UL : static_cast<unsigned long>(std::ceil(threshold - xd));
  const double y_est = xd + static_cast<double>(shift);
  // Bits lost converting log Γ(y) back through exp, plus one rounding per shift factor.
  const Bits log_bits = static_cast<Bits>(std::ceil(std::log2(std::max(2.0, y_est * std::log(y_est)))));
  const Bits work = guard_bits(prec, shift + 4) + log_bits;

  BigReal xw = x.rounded(work);
  BigReal y = xw + static_cast<long>(shift);
  BigReal value = exp(log_gamma_stirling(y, work));
  if (shift != 0) {
    BigReal product(1L, work);
    for (unsigned long i = 0; i < shift; ++i) product *= xw + static_cast<long>(i);
    value /= product;
  }
  return value.rounded(prec);
}

}  // namespace zetaforge
