#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "zetaforge/bigreal.hpp"
#include "zetaforge/errors.hpp"

namespace zetaforge {

/// Largest argument accepted by factorial().
inline constexpr unsigned long kFactorialLimit = 1'000'000;

/// Internal working precision for an operation over `work_size` elementary
/// steps: prec + 32 + ceil(log2(work_size)).
Bits guard_bits(Bits prec, unsigned long work_size = 1);

/// k!; Γ(k) for integer k >= 1 is factorial(k - 1).
ExactInteger factorial(unsigned long k);

/// Binomial coefficient C(n, k).
ExactInteger binomial(unsigned long n, unsigned long k);

/// 2^e as an exact rational, e of either sign.
ExactRational pow2(long e);

/// |result - pi| <= 2^(-prec+2). Requires prec >= 8.
BigReal const_pi(Bits prec);

/// log 2 or log 3 with |result - log k| <= 2^(-prec+2).
/// Throws DomainError for k outside {2, 3}.
BigReal const_log(int k, Bits prec);

/// Γ(x) with relative error <= 2^(-prec+4).
///
/// x is shifted upward past 20 + prec/8, where the Stirling series with its
/// explicit remainder bound is summed; arguments below 1/2 go through the
/// reflection formula. Throws PoleError for non-positive integers.
BigReal gamma_real(const BigReal& x, Bits prec);

/// Polynomial with exact rational coefficients, ascending degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<ExactRational> coefficients);
  RationalPolynomial(std::initializer_list<ExactRational> coefficients);

  static RationalPolynomial monomial(unsigned degree, const ExactRational& coefficient = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<ExactRational>& coefficients() const { return coefficients_; }
  ExactRational coefficient(unsigned i) const;

  ExactRational operator()(const ExactRational& t) const;
  BigReal operator()(const BigReal& t) const;

  /// Exact value of the integral over [0, 1].
  ExactRational integral_unit() const;

  /// Division by (c + sign*t): returns the quotient, stores P(-sign*c) in `remainder`.
  RationalPolynomial divide_linear(const ExactRational& c, int sign, ExactRational& remainder) const;

  RationalPolynomial pow(unsigned exponent) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<ExactRational> coefficients_;
};

/// Exact a + b*log 2 + c*log 3 with rational coefficients.
struct LogLinearValue {
  ExactRational a;
  ExactRational b;
  ExactRational c;

  /// Error at most 4 ulp at `prec`, including when the three parts cancel.
  BigReal to_bigreal(Bits prec) const;

  LogLinearValue& operator+=(const LogLinearValue& rhs);
  LogLinearValue& operator-=(const LogLinearValue& rhs);
  LogLinearValue& operator*=(const ExactRational& k);

  friend LogLinearValue operator+(LogLinearValue x, const LogLinearValue& y) { return x += y; }
  friend LogLinearValue operator-(LogLinearValue x, const LogLinearValue& y) { return x -= y; }
  friend LogLinearValue operator*(LogLinearValue x, const ExactRational& k) { return x *= k; }
  friend LogLinearValue operator*(const ExactRational& k, LogLinearValue x) { return x *= k; }
  friend bool operator==(const LogLinearValue& x, const LogLinearValue& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// Exact ∫₀¹ P(t) / (c + sign*t) dt for c in {1, 2}, sign in {+1, -1}.
/// Throws DomainError for other c, or for sign = -1 with c = 1 (pole at t = 1).
LogLinearValue rational_log_integral(const RationalPolynomial& numerator, const ExactRational& c, int sign);

/// Integrand for the unit interval. Receives t and 1 - t, both computed
/// accurately, so endpoint singularities can be evaluated without cancellation.
using UnitIntegrand = std::function<BigReal(const BigReal& t, const BigReal& one_minus_t)>;

struct QuadratureResult {
  BigReal value;
  /// |last level - previous level|.
  BigReal last_difference;
  int levels;
};

inline constexpr int kQuadratureMaxLevel = 12;

/// Tanh-sinh quadrature over (0, 1) with step halving until two successive
/// levels agree within 2^-prec (relative to max(1, |value|)).
/// Throws NonConvergence after kQuadratureMaxLevel halvings.
QuadratureResult tanh_sinh(const UnitIntegrand& f, Bits prec);

BigReal tanh_sinh_quadrature(const UnitIntegrand& f, Bits prec);

}  // namespace zetaforge
