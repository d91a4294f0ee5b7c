#pragma once

#include <optional>
#include <string_view>

#include "zetaforge/numkernel.hpp"

namespace zetaforge {

enum class StrategyTag { direct, accelerated };

std::string_view to_string(StrategyTag tag);

/// How an infinite series is summed.
///
/// `epsilon` is an absolute target on the returned value: summation stops
/// once the certified tail bound (and, for direct summation, the current
/// term) falls below it, or after `max_terms` summands.
struct EvalStrategy {
  StrategyTag tag = StrategyTag::accelerated;
  BigReal epsilon;
  unsigned long max_terms = 1'000'000;

  /// Accelerated summation targeting 2^-prec.
  static EvalStrategy accelerated(Bits prec, unsigned long max_terms = 1'000'000);
  static EvalStrategy direct(BigReal epsilon, unsigned long max_terms);
};

struct SeriesResult {
  BigReal value;
  /// Number of summand indices evaluated.
  unsigned long terms_used = 0;
  /// Certified bound on |value - exact|: truncation of the infinite part
  /// plus an allowance for the final rounding.
  BigReal tail_bound;
  StrategyTag method = StrategyTag::direct;
  /// Closed-form series subtracted by the accelerated path, when exact.
  std::optional<LogLinearValue> baseline;
};

/// Two equivalent closed forms for ζ(2m+1): through ζ'(-2k) values, or
/// recursively through lower odd zeta values (the first of the two formulas
/// labelled (13) in the original note, here "eq13a").
enum class OddZetaForm { eq9, eq13a };

std::string_view to_string(OddZetaForm form);

/// g_m = sum_{n>=1} Γ(2n) / Γ(2n+2m+2)
///     = (1/Γ(2m+2)) ∫₀¹ (1-t)^{2m} t / (1+t) dt, exactly.
LogLinearValue baseline_g(unsigned long m);

/// ζ(s) for real s > 0 away from integers from
///   ζ(s) = π^{s-1} sin(πs/2) / (1 - 2^{1-s})
///          * sum_{n>=1} (2 - 2^{s-2n}) Γ(2n-s+1) ζ(2n-s+1) / Γ(2n+2).
/// Throws DomainError for s <= 0, PoleError at s = 1 and NearIntegerError
/// within 10^-3 of any other integer.
SeriesResult tyagi_holm_general(const BigReal& s, Bits prec, const EvalStrategy& strategy);

/// sum_{n>=1} (1 - 2^{-2n}) ζ(2n) / (n (2n+1)) - log 2; zero in exact arithmetic.
SeriesResult log2_identity_residual(Bits prec, const EvalStrategy& strategy);

/// The exact rational r with ζ(2m) = r π^{2m} from the finite form
///   ζ(2m) = π^{2m} (-1)^m / (2 (1 - 2^{1-2m}))
///           * (-1/Γ(2m+2) + sum_{n=1}^{m-1} (2 - 2^{2m-2n}) ζ(2n-2m+1) / (Γ(2n+2) Γ(2m-2n))).
ExactRational zeta_even_series_rational(unsigned long m);

/// ζ(2m) from the finite form above; only the π^{2m} factor is floating.
BigReal zeta_even_series(unsigned long m, Bits prec);

/// ζ(2m+1) from either odd-argument closed form plus the convergent series
/// sum_{n>=1} (2 - 2^{1-2n}) Γ(2n) ζ(2n) / Γ(2m+2n+2).
SeriesResult zeta_odd_series(unsigned long m, Bits prec, OddZetaForm form, const EvalStrategy& strategy);

/// LHS - RHS of the reordered identity (second formula labelled (13), "eq13b"):
///   sum_{n>=0} (2^{-2n-2} - 1) Γ(2n+2) ζ(2n+2) / Γ(2m+2n+4)
///     = -(1/2) sum_{n=0}^{m-1} (2^{-2n-2} - 1) (-1)^n ζ(2n+3) / (Γ(2m-2n) π^{2n+2})
///       - log 2 / (2 Γ(2m+2)).
SeriesResult reordered_identity_residual(unsigned long m, Bits prec, const EvalStrategy& strategy);

/// The infinite series shared by the odd-argument forms, on its own.
SeriesResult odd_zeta_tail_series(unsigned long m, Bits prec, const EvalStrategy& strategy);

}  // namespace zetaforge
