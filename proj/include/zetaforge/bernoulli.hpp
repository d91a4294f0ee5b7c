#pragma once

#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "zetaforge/numkernel.hpp"

namespace zetaforge {

enum class BernoulliMethod { euler, milgram };

std::string_view to_string(BernoulliMethod method);

/// Append-only cache of Bernoulli numbers, one independent sequence per method.
///
/// Each method builds new entries only from its own earlier entries, so
/// comparing the two sequences compares two genuinely separate computations. Lookups take a shared lock; computing new entries
/// takes the exclusive lock. B_0 = 1, B_1 = -1/2 and B_k = 0 for odd k >= 3
/// are answered without touching the cache.
class BernoulliTable {
 public:
  BernoulliTable() = default;
  BernoulliTable(const BernoulliTable&) = delete;
  BernoulliTable& operator=(const BernoulliTable&) = delete;

  /// B_k from Euler's recursion sum_{n=0}^{k} C(k+1, n) B_n = 0.
  ExactRational euler(unsigned long k);

  /// B_{2m} from the even-index recursion that never involves B_1:
  /// B_{2m} = Γ(2m+1) 2^{-2m} / (1 - 2^{1-2m})
  ///          * sum_{n=1}^{m} B_{2m-2n} (2 - 2^{2m-2n}) / (Γ(2m-2n+1) Γ(2n+2)).
  ExactRational milgram(unsigned long m);

  /// Cached B_k for the given method, if already computed.
  std::optional<ExactRational> find(unsigned long k, BernoulliMethod method) const;

  /// Largest even index cached for the method (0 when only B_0 is known).
  unsigned long max_even_index(BernoulliMethod method) const;

  /// Process-wide table used by the free functions below.
  static BernoulliTable& shared();

 private:
  void extend_euler(unsigned long j_max);
  void extend_milgram(unsigned long j_max);

  mutable std::shared_mutex mutex_;
  // B_{2j} at position j; position 0 holds B_0.
  std::vector<ExactRational> euler_even_{ExactRational(1)};
  std::vector<ExactRational> milgram_even_{ExactRational(1)};
};

ExactRational bernoulli_euler(unsigned long k);
ExactRational bernoulli_milgram(unsigned long m);

/// Coefficients of the expanded recursion for B_{2m}: entry j multiplies
/// B_{2j}, j = 0..m-1. For m = 6 these are the printed
/// (1/53222, -6/2047, -385/2047, -4092/2047, -12573/2047, -11242/2047).
std::vector<ExactRational> milgram_coefficients(unsigned long m);

/// sum_{n=0}^{m} C(2m, 2m-2n) B_{2n} / (2n-2m-1) * (2 - 2^{2n}) / (2 - 2^{2m}),
/// evaluated with entries from the even-index recursion. Exactly zero when the recursion holds.
ExactRational eq5_residual(unsigned long m);

/// ζ(2m) = (-1)^{m+1} (2π)^{2m} B_{2m} / (2 (2m)!), relative error <= 2^(-prec+6).
BigReal zeta_even_closed(unsigned long m, Bits prec);

/// The exact rational factor r with ζ(2m) = r π^{2m}.
ExactRational zeta_even_rational(unsigned long m);

/// ζ(1 - 2n) = -B_{2n} / (2n).
ExactRational zeta_neg_odd_exact(unsigned long n);

}  // namespace zetaforge
