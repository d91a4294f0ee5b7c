#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "zetaforge/cli.hpp"
#include "zetaforge/zetacore.hpp"

namespace zetaforge::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Direct summation without --epsilon stops at this absolute target (or max terms).
constexpr double kDefaultDirectEpsilon = 1e-6;

long micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

std::string decimal(const BigReal& x, Bits prec) { return x.rounded(prec).to_string(); }

std::string bound_string(const BigReal& x) { return x.to_string(6); }

EvalStrategy make_strategy(const CommandRequest& request) {
  const unsigned long cap = effective_max_terms(request);
  if (request.strategy == StrategyTag::accelerated) return EvalStrategy::accelerated(request.prec_bits, cap);
  BigReal eps(kDefaultDirectEpsilon, 64);
  if (request.epsilon) {
    try {
      eps = BigReal::parse(*request.epsilon, 64);
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid --epsilon '" + *request.epsilon + "'");
    }
  }
  if (!(eps > 0L)) throw UsageError("--epsilon must be positive");
  return EvalStrategy::direct(eps, cap);
}

ReportRecord series_record(std::string name, const SeriesResult& r, Bits prec, Clock::time_point start) {
  ReportRecord rec;
  rec.name = std::move(name);
  rec.value = decimal(r.value, prec);
  rec.tail_bound = bound_string(r.tail_bound);
  rec.terms_used = r.terms_used;
  rec.elapsed_us = micros_since(start);
  return rec;
}

ReportRecord check(std::string name, const BigReal& residual, const BigReal& threshold, Clock::time_point start,
                   const BigReal& tail = BigReal(0L, 64), unsigned long terms = 0) {
  ReportRecord rec;
  rec.name = std::move(name);
  rec.value = residual.to_string(20);
  rec.tail_bound = bound_string(tail);
  rec.terms_used = terms;
  rec.elapsed_us = micros_since(start);
  rec.pass = abs(residual) <= threshold;
  rec.threshold = bound_string(threshold);
  return rec;
}

std::string index_name(long k) { return "B_" + std::to_string(k); }

std::vector<std::string> selected_suites(const CommandRequest& request) {
  if (request.suites.empty()) return verify_suites();
  for (const auto& s : request.suites) {
    if (s == "all") return verify_suites();
  }
  return request.suites;
}

// --- verification suites ---------------------------------------------------

void suite_eq2(const CommandRequest& req, std::vector<ReportRecord>& out) {
  const auto start = Clock::now();
  const SeriesResult r = log2_identity_residual(req.prec_bits, make_strategy(req));
  const BigReal threshold = r.tail_bound + exp2i(-req.prec_bits + 8, 64);
  out.push_back(check("eq2", r.value, threshold, start, r.tail_bound, r.terms_used));
}

void suite_eq3(const CommandRequest& req, std::vector<ReportRecord>& out) {
  const Bits prec = req.prec_bits;
  for (unsigned long m = 1; m <= req.max_m; ++m) {
    const auto start = Clock::now();
    const BigReal closed = zeta_even_closed(m, prec + 32);
    const BigReal series = zeta_even_series(m, prec + 32);
    const BigReal rel = (series - closed) / closed;
    out.push_back(check("eq3[m=" + std::to_string(m) + "]", rel, exp2i(-prec + 16, 64), start));
    out.back().note = "relative difference from the Bernoulli closed form";
  }
}

void suite_eq5(const CommandRequest& req, std::vector<ReportRecord>& out) {
  for (unsigned long m = 1; m <= req.max_m; ++m) {
    const auto start = Clock::now();
    const ExactRational residual = eq5_residual(m);
    ReportRecord rec;
    rec.name = "eq5[m=" + std::to_string(m) + "]";
    rec.value = residual.get_str();
    rec.elapsed_us = micros_since(start);
    rec.pass = residual == 0;
    rec.threshold = "0";
    out.push_back(std::move(rec));
  }
}

void suite_eq9_vs_eq13a(const CommandRequest& req, std::vector<ReportRecord>& out) {
  const EvalStrategy strategy = make_strategy(req);
  for (unsigned long m = 1; m <= req.max_m; ++m) {
    const auto start = Clock::now();
    const SeriesResult a = zeta_odd_series(m, req.prec_bits, OddZetaForm::eq9, strategy);
    const SeriesResult b = zeta_odd_series(m, req.prec_bits, OddZetaForm::eq13a, strategy);
    // Both forms share the same infinite series, so truncation cancels; only rounding remains.
    const BigReal threshold = exp2i(-req.prec_bits + 16, 64);
    out.push_back(check("eq9-vs-eq13a[m=" + std::to_string(m) + "]", a.value - b.value, threshold, start,
                        max(a.tail_bound, b.tail_bound), a.terms_used + b.terms_used));
  }
}

void suite_eq12_fd(const CommandRequest& req, std::vector<ReportRecord>& out) {
  const Bits prec = req.prec_bits;
  const BigReal h = BigReal::parse("1e-10", prec + 64);
  for (unsigned long n = 1; n <= req.max_m; ++n) {
    const auto start = Clock::now();
    const BigReal exact = zeta_prime_neg_even(n, prec);
    const BigReal fd = zeta_prime_fd(BigReal(-2L * static_cast<long>(n), prec), prec, h);
    BigReal scale = max(BigReal(1L, 64), abs(exact).rounded(64));
    const BigReal floor_eps = max(BigReal(1e-12, 64), exp2i(-prec + 8, 64));
    out.push_back(check("eq12-fd[n=" + std::to_string(n) + "]", fd - exact, floor_eps * scale, start));
    out.back().note = "central difference, h = 1e-10";
  }
}

void suite_eq13b(const CommandRequest& req, std::vector<ReportRecord>& out) {
  const EvalStrategy strategy = make_strategy(req);
  for (unsigned long m = 1; m <= req.max_m; ++m) {
    const auto start = Clock::now();
    const SeriesResult r = reordered_identity_residual(m, req.prec_bits, strategy);
    const BigReal threshold = r.tail_bound + exp2i(-req.prec_bits + 8, 64);
    out.push_back(check("eq13b[m=" + std::to_string(m) + "]", r.value, threshold, start, r.tail_bound,
                        r.terms_used));
  }
}

void suite_eq1_oracle(const CommandRequest& req, std::vector<ReportRecord>& out) {
  const EvalStrategy strategy = make_strategy(req);
  for (const char* text : {"0.5", "1.5", "2.5", "3.7", "6.3"}) {
    const auto start = Clock::now();
    const BigReal s = BigReal::parse(text, req.prec_bits + 64);
    const SeriesResult r = tyagi_holm_general(s, req.prec_bits, strategy);
    const BigReal oracle = zeta_em(s, req.prec_bits + 16);
    const BigReal threshold = r.tail_bound + exp2i(-req.prec_bits + 28, 64);
    out.push_back(check(std::string("eq1-oracle[s=") + text + "]", r.value - oracle, threshold, start, r.tail_bound,
                        r.terms_used));
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"eq2",    "eq3",   "eq5",       "eq9-vs-eq13a",
                                              "eq12-fd", "eq13b", "eq1-oracle"};
  return names;
}

ReportRecord run_compute(const CommandRequest& request) {
  validate(request);
  const Bits prec = request.prec_bits;
  const auto start = Clock::now();

  if (request.even_m) {
    ReportRecord rec;
    rec.name = "zeta(" + std::to_string(2 * *request.even_m) + ")";
    rec.value = decimal(zeta_even_series(*request.even_m, prec), prec);
    rec.elapsed_us = micros_since(start);
    return rec;
  }
  if (request.odd_m) {
    const SeriesResult r = zeta_odd_series(*request.odd_m, prec, request.form, make_strategy(request));
    return series_record("zeta(" + std::to_string(2 * *request.odd_m + 1) + ")", r, prec, start);
  }

  BigReal s(prec);
  try {
    s = BigReal::parse(*request.s, prec + 64);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid --s '" + *request.s + "'");
  }
  if (!s.is_finite()) throw UsageError("--s must be finite");
  const std::string name = "zeta(" + *request.s + ")";
  if (s.is_integer() && s >= 1L) {
    const long k = s.to_long_round();
    if (k == 1) throw PoleError("pole at s=1");
    if (k % 2 == 0) {
      ReportRecord rec;
      rec.name = name;
      rec.value = decimal(zeta_even_series(static_cast<unsigned long>(k / 2), prec), prec);
      rec.elapsed_us = micros_since(start);
      return rec;
    }
    const SeriesResult r =
        zeta_odd_series(static_cast<unsigned long>((k - 1) / 2), prec, request.form, make_strategy(request));
    return series_record(name, r, prec, start);
  }
  const SeriesResult r = tyagi_holm_general(s, prec, make_strategy(request));
  return series_record(name, r, prec, start);
}

std::vector<ReportRecord> run_bernoulli(const CommandRequest& request) {
  validate(request);
  const long first = request.index.value_or(request.range_first.value_or(0));
  const long last = request.index.value_or(request.range_last.value_or(0));
  const bool euler = request.method != "milgram";
  const bool milgram = request.method != "euler";

  std::vector<ReportRecord> records;
  for (long k = first; k <= last; ++k) {
    const auto start = Clock::now();
    ReportRecord rec;
    rec.name = index_name(k);
    if (k == 0) {
      rec.value = "1";
    } else if (k > 1 && k % 2 == 1) {
      rec.value = "0";
      rec.note = "odd index > 1";
    } else if (k == 1) {
      rec.value = bernoulli_euler(1).get_str();
      if (milgram) rec.note = "B_1 is outside the even-index recursion; value from Euler's recursion";
    } else {
      const auto half = static_cast<unsigned long>(k / 2);
      std::optional<ExactRational> e;
      std::optional<ExactRational> g;
      if (euler) e = bernoulli_euler(static_cast<unsigned long>(k));
      if (milgram) g = bernoulli_milgram(half);
      rec.value = (e ? *e : *g).get_str();
      if (e && g) rec.pass = *e == *g;
    }
    rec.elapsed_us = micros_since(start);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ReportRecord> run_verify(const CommandRequest& request) {
  validate(request);
  std::vector<ReportRecord> records;
  for (const auto& suite : selected_suites(request)) {
    if (suite == "eq2") suite_eq2(request, records);
    else if (suite == "eq3") suite_eq3(request, records);
    else if (suite == "eq5") suite_eq5(request, records);
    else if (suite == "eq9-vs-eq13a") suite_eq9_vs_eq13a(request, records);
    else if (suite == "eq12-fd") suite_eq12_fd(request, records);
    else if (suite == "eq13b") suite_eq13b(request, records);
    else if (suite == "eq1-oracle") suite_eq1_oracle(request, records);
  }
  return records;
}

std::vector<BenchRecord> run_bench(const CommandRequest& request) {
  validate(request);
  std::vector<BernoulliMethod> methods;
  if (request.methods != "milgram") methods.push_back(BernoulliMethod::euler);
  if (request.methods != "euler") methods.push_back(BernoulliMethod::milgram);

  std::vector<BenchRecord> rows;
  std::vector<std::vector<ExactRational>> values(methods.size());
  for (std::size_t i = 0; i < methods.size(); ++i) {
    BernoulliTable table;  // cold per method
    long long cumulative_ns = 0;
    for (long k = 2; k <= request.max_index; k += 2) {
      const auto start = Clock::now();
      ExactRational b = methods[i] == BernoulliMethod::euler ? table.euler(static_cast<unsigned long>(k))
                                                             : table.milgram(static_cast<unsigned long>(k / 2));
      const long long ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
      cumulative_ns += ns;
      BenchRecord row;
      row.index = static_cast<unsigned long>(k);
      row.method = methods[i];
      row.elapsed_us = static_cast<double>(ns) / 1000.0;
      row.cumulative_us = static_cast<double>(cumulative_ns) / 1000.0;
      row.numerator_bits = mpz_sizeinbase(b.get_num_mpz_t(), 2);
      row.denominator_bits = mpz_sizeinbase(b.get_den_mpz_t(), 2);
      rows.push_back(row);
      values[i].push_back(std::move(b));
    }
  }
  if (methods.size() == 2) {
    const std::size_t per = values[0].size();
    for (std::size_t j = 0; j < per; ++j) {
      const bool equal = values[0][j] == values[1][j];
      rows[j].cross_equal = equal;
      rows[per + j].cross_equal = equal;
    }
  }
  return rows;
}

int verification_exit_code(const std::vector<ReportRecord>& records) {
  for (const auto& r : records) {
    if (!r.pass.value_or(true)) return kExitVerificationFailed;
  }
  return kExitOk;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<CommandRequest> parsed = parse_request(argc, argv, out);
    if (!parsed) return kExitOk;
    const CommandRequest& request = *parsed;

    std::ostringstream buffer;
    bool all_pass = true;
    switch (request.subcommand) {
      case Subcommand::compute:
        write_report(buffer, std::vector<ReportRecord>{run_compute(request)}, request.format);
        break;
      case Subcommand::bernoulli: {
        const auto records = run_bernoulli(request);
        all_pass = verification_exit_code(records) == kExitOk;
        write_report(buffer, records, request.format);
        break;
      }
      case Subcommand::verify: {
        const auto records = run_verify(request);
        all_pass = verification_exit_code(records) == kExitOk;
        write_report(buffer, records, request.format);
        break;
      }
      case Subcommand::bench: {
        const auto rows = run_bench(request);
        for (const auto& r : rows) all_pass = all_pass && r.cross_equal.value_or(true);
        write_report(buffer, rows, request.format);
        break;
      }
    }

    if (request.out) {
      std::ofstream file(*request.out);
      if (!file) throw UsageError("cannot open --out file '" + *request.out + "'");
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return all_pass ? kExitOk : kExitVerificationFailed;
  } catch (const NonConvergence& e) {
    err << "zetaforge: error: " << e.kind() << ": " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "zetaforge: error: " << e.kind() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "zetaforge: error: internal: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace zetaforge::cli
