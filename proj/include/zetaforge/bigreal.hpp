#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace zetaforge {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// Precision in bits.
using Bits = long;

/// Arbitrary-precision binary floating point value with an explicit precision.
///
/// Thin RAII wrapper over an MPFR number. Binary operations round to nearest
/// at the larger of the two operand precisions, so each basic operation is
/// correctly rounded (error at most half an ulp).
class BigReal {
 public:
  static constexpr Bits kDefaultBits = 64;

  BigReal() : BigReal(kDefaultBits) {}
  explicit BigReal(Bits bits);
  BigReal(long value, Bits bits);
  BigReal(double value, Bits bits);
  BigReal(const ExactInteger& value, Bits bits);
  /// Correctly rounded; exact whenever the rational is representable.
  BigReal(const ExactRational& value, Bits bits);

  /// Parses a decimal (or `inf`/`nan`) literal, correctly rounded.
  /// Throws std::invalid_argument on malformed input.
  static BigReal parse(std::string_view text, Bits bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Bits precision() const { return mpfr_get_prec(value_); }

  /// Copy rounded to `bits`.
  BigReal rounded(Bits bits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long_round() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Exact conversion; the value must be finite.
  ExactRational to_rational() const;

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  /// Enough digits that parsing back at this precision reproduces the value.
  std::string to_string() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, long b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
};

inline BigReal operator+(BigReal a, long b) { return a += b; }
inline BigReal operator-(BigReal a, long b) { return a -= b; }
inline BigReal operator*(BigReal a, long b) { return a *= b; }
inline BigReal operator/(BigReal a, long b) { return a /= b; }
inline BigReal operator+(long a, BigReal b) { return b += a; }
inline BigReal operator*(long a, BigReal b) { return b *= a; }
BigReal operator-(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);

// Elementary functions, rounded to the argument's precision.
BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal round(const BigReal& x);
/// x^y at the larger of the two precisions.
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
/// base^y for a positive integer base.
BigReal pow(unsigned long base, const BigReal& y);
/// sin(pi x), exact zero at integers.
BigReal sin_pi(const BigReal& x);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
/// 2^e at the given precision, exact.
BigReal exp2i(long e, Bits bits);

BigReal max(const BigReal& a, const BigReal& b);

}  // namespace zetaforge
