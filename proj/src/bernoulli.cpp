#include "zetaforge/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace zetaforge {

std::string_view to_string(BernoulliMethod method) {
  return method == BernoulliMethod::euler ? "euler" : "milgram";
}

BernoulliTable& BernoulliTable::shared() {
  static BernoulliTable table;
  return table;
}

std::optional<ExactRational> BernoulliTable::find(unsigned long k, BernoulliMethod method) const {
  if (k == 0) return ExactRational(1);
  if (k == 1) {
    // B_1 is part of Euler's recursion only.
    if (method == BernoulliMethod::euler) return ExactRational(-1, 2);
    return std::nullopt;
  }
  if (k % 2 == 1) return ExactRational(0);
  std::shared_lock lock(mutex_);
  const auto& entries = method == BernoulliMethod::euler ? euler_even_ : milgram_even_;
  if (k / 2 < entries.size()) return entries[k / 2];
  return std::nullopt;
}

unsigned long BernoulliTable::max_even_index(BernoulliMethod method) const {
  std::shared_lock lock(mutex_);
  const auto& entries = method == BernoulliMethod::euler ? euler_even_ : milgram_even_;
  return 2 * (entries.size() - 1);
}

ExactRational BernoulliTable::euler(unsigned long k) {
  if (k == 1) return ExactRational(-1, 2);
  if (k % 2 == 1) return ExactRational(0);
  const unsigned long j = k / 2;
  {
    std::shared_lock lock(mutex_);
    if (j < euler_even_.size()) return euler_even_[j];
  }
  std::unique_lock lock(mutex_);
  if (j >= euler_even_.size()) extend_euler(j);
  return euler_even_[j];
}

ExactRational BernoulliTable::milgram(unsigned long m) {
  if (m == 0) throw std::invalid_argument("bernoulli_milgram requires m >= 1");
  {
    std::shared_lock lock(mutex_);
    if (m < milgram_even_.size()) return milgram_even_[m];
  }
  std::unique_lock lock(mutex_);
  if (m >= milgram_even_.size()) extend_milgram(m);
  return milgram_even_[m];
}

void BernoulliTable::extend_euler(unsigned long j_max) {
  for (unsigned long j = euler_even_.size(); j <= j_max; ++j) {
    // sum_{n=0}^{2j} C(2j+1, n) B_n = 0 solved for the n = 2j term.
    const unsigned long top = 2 * j + 1;
    ExactRational sum(ExactInteger(2) - ExactInteger(top), 2);  // C(top,0) B_0 + C(top,1) B_1
    sum.canonicalize();
    ExactInteger binom = top;  // C(top, i), starting at i = 1
    for (unsigned long i = 2; i < 2 * j; ++i) {
      binom *= top - i + 1;
      binom /= i;
      if (i % 2 == 0) sum += binom * euler_even_[i / 2];
    }
    euler_even_.push_back(-sum / ExactRational(static_cast<long>(top)));
  }
}

void BernoulliTable::extend_milgram(unsigned long j_max) {
  for (unsigned long m = milgram_even_.size(); m <= j_max; ++m) {
    // Γ(2m+1) / (Γ(2m-2n+1) Γ(2n+2)) = C(2m+1, 2n+1) / (2m+1) and
    // 2^{-2m} / (1 - 2^{1-2m}) = 1 / (2^{2m} - 2); the common factor
    // 1 / ((2m+1)(2^{2m} - 2)) is applied once after the sum.
    const unsigned long top = 2 * m + 1;
    ExactRational sum(0);
    ExactInteger binom = top;  // C(top, i), starting at i = 1
    for (unsigned long i = 2; i <= top; ++i) {
      binom *= top - i + 1;
      binom /= i;
      if (i % 2 == 0) continue;
      const unsigned long n = (i - 1) / 2;  // i = 2n + 1
      const ExactInteger weight = ExactInteger(2) - (ExactInteger(1) << static_cast<mp_bitcnt_t>(2 * (m - n)));
      sum += ExactRational(binom * weight) * milgram_even_[m - n];
    }
    const ExactInteger scale =
        ExactInteger(static_cast<unsigned long>(top)) * ((ExactInteger(1) << static_cast<mp_bitcnt_t>(2 * m)) - 2);
    milgram_even_.push_back(sum / ExactRational(scale));
  }
}

ExactRational bernoulli_euler(unsigned long k) { return BernoulliTable::shared().euler(k); }

ExactRational bernoulli_milgram(unsigned long m) { return BernoulliTable::shared().milgram(m); }

std::vector<ExactRational> milgram_coefficients(unsigned long m) {
  if (m == 0) throw std::invalid_argument("milgram_coefficients requires m >= 1");
  const long two_m = static_cast<long>(2 * m);
  const ExactRational prefactor = ExactRational(factorial(2 * m)) * pow2(-two_m) / (ExactRational(1) - pow2(1 - two_m));
  std::vector<ExactRational> coefficients(m);
  for (unsigned long n = 1; n <= m; ++n) {
    const unsigned long j = m - n;
    const ExactRational weight = ExactRational(2) - pow2(static_cast<long>(2 * j));
    coefficients[j] = prefactor * weight / ExactRational(factorial(2 * j) * factorial(2 * n + 1));
  }
  return coefficients;
}

ExactRational eq5_residual(unsigned long m) {
  if (m == 0) throw std::invalid_argument("eq5_residual requires m >= 1");
  BernoulliTable& table = BernoulliTable::shared();
  const long two_m = static_cast<long>(2 * m);
  const ExactRational denominator = ExactRational(2) - pow2(two_m);
  ExactRational sum(0);
  for (unsigned long n = 0; n <= m; ++n) {
    const ExactRational b = n == 0 ? ExactRational(1) : table.milgram(n);
    const long two_n = static_cast<long>(2 * n);
    ExactRational term = ExactRational(binomial(2 * m, 2 * m - 2 * n)) * b / ExactRational(two_n - two_m - 1);
    term *= (ExactRational(2) - pow2(two_n)) / denominator;
    sum += term;
  }
  return sum;
}

ExactRational zeta_even_rational(unsigned long m) {
  if (m == 0) throw std::invalid_argument("zeta_even_closed requires m >= 1");
  const ExactRational b = bernoulli_euler(2 * m);
  ExactRational r = pow2(static_cast<long>(2 * m)) * b / ExactRational(2 * factorial(2 * m));
  return m % 2 == 1 ? r : ExactRational(-r);
}

BigReal zeta_even_closed(unsigned long m, Bits prec) {
  const ExactRational r = zeta_even_rational(m);
  const Bits work = guard_bits(prec, 2 * m);
  BigReal pi(work);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  return (BigReal(r, work) * pow(pi, static_cast<long>(2 * m))).rounded(prec);
}

ExactRational zeta_neg_odd_exact(unsigned long n) {
  if (n == 0) throw std::invalid_argument("zeta_neg_odd_exact requires n >= 1");
  return -bernoulli_euler(2 * n) / ExactRational(static_cast<long>(2 * n));
}

}  // namespace zetaforge
