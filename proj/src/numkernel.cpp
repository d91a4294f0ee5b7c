#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zetaforge/numkernel.hpp"

namespace zetaforge {

Bits guard_bits(Bits prec, unsigned long work_size) {
  const Bits size_bits = work_size <= 1 ? 0 : static_cast<Bits>(std::bit_width(work_size - 1));
  return prec + 32 + size_bits;
}

ExactInteger factorial(unsigned long k) {
  if (k > kFactorialLimit) {
    throw std::invalid_argument("factorial argument " + std::to_string(k) + " exceeds the configured limit");
  }
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

ExactInteger binomial(unsigned long n, unsigned long k) {
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactRational pow2(long e) {
  ExactRational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

BigReal const_pi(Bits prec) {
  if (prec < 8) throw std::invalid_argument("const_pi requires prec >= 8");
  BigReal work(guard_bits(prec));
  mpfr_const_pi(work.get(), MPFR_RNDN);
  return work.rounded(prec);
}

BigReal const_log(int k, Bits prec) {
  BigReal work(guard_bits(prec));
  switch (k) {
    case 2:
      mpfr_const_log2(work.get(), MPFR_RNDN);
      break;
    case 3:
      mpfr_log_ui(work.get(), 3, MPFR_RNDN);
      break;
    default:
      throw DomainError("const_log supports only log 2 and log 3, got log " + std::to_string(k));
  }
  return work.rounded(prec);
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<ExactRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<ExactRational> coefficients)
    : coefficients_(coefficients) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(unsigned degree, const ExactRational& coefficient) {
  std::vector<ExactRational> c(degree + 1, ExactRational(0));
  c[degree] = coefficient;
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

ExactRational RationalPolynomial::coefficient(unsigned i) const {
  return i < coefficients_.size() ? coefficients_[i] : ExactRational(0);
}

ExactRational RationalPolynomial::operator()(const ExactRational& t) const {
  ExactRational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BigReal RationalPolynomial::operator()(const BigReal& t) const {
  BigReal acc(t.precision());
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * t + BigReal(*it, t.precision());
  }
  return acc;
}

ExactRational RationalPolynomial::integral_unit() const {
  ExactRational acc(0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    acc += coefficients_[i] / ExactRational(static_cast<long>(i + 1));
  }
  return acc;
}

RationalPolynomial RationalPolynomial::divide_linear(const ExactRational& c, int sign,
                                                     ExactRational& remainder) const {
  // Synthetic division by sign*(t - root) with root = -sign*c.
  if (coefficients_.empty()) {
    remainder = 0;
    return {};
  }
  const ExactRational root = sign > 0 ? ExactRational(-c) : c;
  const std::size_t n = coefficients_.size();
  std::vector<ExactRational> quotient(n - 1);
  ExactRational carry = coefficients_[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    quotient[i] = carry;
    carry = coefficients_[i] + carry * root;
  }
  remainder = carry;
  if (sign < 0) {
    for (auto& q : quotient) q = -q;
  }
  return RationalPolynomial(std::move(quotient));
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const {
  RationalPolynomial result{ExactRational(1)};
  RationalPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<ExactRational> c(std::max(a.coefficients_.size(), b.coefficients_.size()), ExactRational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<ExactRational> c(std::max(a.coefficients_.size(), b.coefficients_.size()), ExactRational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> c(a.coefficients_.size() + b.coefficients_.size() - 1, ExactRational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return RationalPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// LogLinearValue

LogLinearValue& LogLinearValue::operator+=(const LogLinearValue& rhs) {
  a += rhs.a;
  b += rhs.b;
  c += rhs.c;
  return *this;
}

LogLinearValue& LogLinearValue::operator-=(const LogLinearValue& rhs) {
  a -= rhs.a;
  b -= rhs.b;
  c -= rhs.c;
  return *this;
}

LogLinearValue& LogLinearValue::operator*=(const ExactRational& k) {
  a *= k;
  b *= k;
  c *= k;
  return *this;
}

BigReal LogLinearValue::to_bigreal(Bits prec) const {
  if (b == 0 && c == 0) return BigReal(a, prec);
  // 1, log 2 and log 3 are linearly independent over Q, so the sum is nonzero;
  // widen until the cancellation between the parts is covered.
  Bits work = guard_bits(prec, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    BigReal pa(a, work);
    BigReal pb = BigReal(b, work) * const_log(2, work);
    BigReal pc = BigReal(c, work) * const_log(3, work);
    BigReal sum = pa + pb + pc;
    long top = LONG_MIN;
    for (const BigReal* part : {&pa, &pb, &pc}) {
      if (!part->is_zero()) top = std::max(top, part->exponent());
    }
    if (!sum.is_zero()) {
      const long lost = std::max(0L, top - sum.exponent());
      if (prec + lost + 16 <= work) return sum.rounded(prec);
      work = prec + lost + 48;
    } else {
      work *= 2;
    }
  }
  throw PrecisionUnreachable("LogLinearValue conversion did not resolve cancellation");
}

LogLinearValue rational_log_integral(const RationalPolynomial& numerator, const ExactRational& c, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("rational_log_integral: sign must be +1 or -1");
  if (c != 1 && c != 2) {
    throw DomainError("rational_log_integral: c must be 1 or 2, got " + c.get_str());
  }
  if (sign < 0 && c == 1) throw DomainError("rational_log_integral: 1 - t vanishes at t = 1");

  ExactRational remainder;
  const RationalPolynomial quotient = numerator.divide_linear(c, sign, remainder);

  // ∫₀¹ dt / (c + t) = log((c + 1) / c),  ∫₀¹ dt / (c - t) = log(c / (c - 1)).
  LogLinearValue log_term;
  if (sign > 0 && c == 1) {
    log_term = {0, 1, 0};
  } else if (sign > 0) {
    log_term = {0, -1, 1};
  } else {
    log_term = {0, 1, 0};
  }
  LogLinearValue result = log_term * remainder;
  result.a += quotient.integral_unit();
  return result;
}

}  // namespace zetaforge
