#include "zetaforge/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace zetaforge {

namespace {

Bits wider(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

template <typename Fn>
BigReal unary(const BigReal& x, Fn&& fn) {
  BigReal r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal::BigReal(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const ExactInteger& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const ExactRational& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, Bits bits) {
  std::string owned(text);
  BigReal r(bits);
  if (owned.empty()) throw std::invalid_argument("empty real literal");
  char* end = nullptr;
  mpfr_strtofr(r.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (end != owned.c_str() + owned.size()) {
    throw std::invalid_argument("not a real number: '" + owned + "'");
  }
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::rounded(Bits bits) const {
  BigReal r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

ExactRational BigReal::to_rational() const {
  if (!is_finite()) throw std::domain_error("to_rational of a non-finite value");
  if (is_zero()) return ExactRational(0);
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  ExactRational r(mantissa);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(std::max(digits, 2)), value_, MPFR_RNDN),
      mpfr_free_str);
  std::string mantissa(raw.get());
  std::string out;
  if (mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  out.push_back(mantissa.front());
  out.push_back('.');
  out.append(mantissa, 1, std::string::npos);
  out.push_back('e');
  out += std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

std::string BigReal::to_string() const {
  // ceil(prec * log10(2)) + 2 digits.
  const int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 2;
  return to_string(digits);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal log2(const BigReal& x) { return unary(x, mpfr_log2); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal round(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal pow(unsigned long base, const BigReal& y) {
  BigReal r(y.precision());
  mpfr_ui_pow(r.get(), base, y.get(), MPFR_RNDN);
  return r;
}

BigReal sin_pi(const BigReal& x) {
  const Bits bits = x.precision();
  if (x.is_integer()) return BigReal(bits);
  // Exact reduction to r in (-1, 1]: the integer part is dropped without rounding
  // because the working precision covers the exponent of x.
  const Bits exact_bits = bits + std::max<long>(x.exponent(), 0) + 2;
  BigReal xr = x.rounded(exact_bits);
  BigReal half = ldexp(xr, -1);
  BigReal r = xr - ldexp(round(half), 1);
  // sin(pi r) = sin(pi (1 - r)) folds r into [-1/2, 1/2].
  if (r > BigReal(0.5, 8)) r = 1L - r;
  if (r < BigReal(-0.5, 8)) r = -1L - r;
  const Bits work = bits + 16;
  BigReal pi(work);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  return sin(pi * r.rounded(work)).rounded(bits);
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigReal exp2i(long e, Bits bits) {
  BigReal r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

}  // namespace zetaforge
