#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetaforge/bernoulli.hpp"
#include "zetaforge/tyagiholm.hpp"

namespace zetaforge::cli {

enum class Subcommand { compute, bernoulli, verify, bench };
enum class OutputFormat { plain, json, csv };

inline constexpr Bits kMinPrecBits = 8;
inline constexpr Bits kMaxPrecBits = 16384;
inline constexpr unsigned long kDefaultMaxTerms = 1'000'000;
inline constexpr unsigned long kMaxBenchIndex = 2000;

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Invalid request: bad flag values, unknown suite, out-of-range indices.
class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UsageError"; }
};

struct CommandRequest {
  Subcommand subcommand = Subcommand::compute;

  // compute
  std::optional<std::string> s;
  std::optional<unsigned long> odd_m;
  std::optional<unsigned long> even_m;
  OddZetaForm form = OddZetaForm::eq9;
  std::optional<std::string> epsilon;

  // bernoulli
  std::optional<long> index;
  std::optional<long> range_first;
  std::optional<long> range_last;
  std::string method = "euler";

  // verify
  std::vector<std::string> suites;
  unsigned long max_m = 10;

  // bench
  long max_index = 0;
  std::string methods = "both";

  Bits prec_bits = 128;
  StrategyTag strategy = StrategyTag::accelerated;
  unsigned long max_terms = kDefaultMaxTerms;
  OutputFormat format = OutputFormat::plain;
  std::optional<std::string> out;
};

/// Parses command-line arguments (argv[0] is the program name).
/// Throws UsageError; returns std::nullopt after printing --help output.
std::optional<CommandRequest> parse_request(int argc, const char* const* argv, std::ostream& help_out);

/// Checks field invariants; throws UsageError.
void validate(const CommandRequest& request);

/// Series length cap: the request value, further capped by ZETAFORGE_MAX_TERMS.
unsigned long effective_max_terms(const CommandRequest& request);

struct ReportRecord {
  std::string name;
  std::string value;
  std::string tail_bound = "0";
  unsigned long terms_used = 0;
  long elapsed_us = 0;
  /// Present iff the record is a verification.
  std::optional<bool> pass;
  std::optional<std::string> threshold;
  std::optional<std::string> note;
};

struct BenchRecord {
  unsigned long index = 0;
  BernoulliMethod method = BernoulliMethod::euler;
  double elapsed_us = 0.0;
  double cumulative_us = 0.0;
  std::size_t numerator_bits = 0;
  std::size_t denominator_bits = 0;
  /// Set when both methods ran.
  std::optional<bool> cross_equal;
};

ReportRecord run_compute(const CommandRequest& request);
std::vector<ReportRecord> run_bernoulli(const CommandRequest& request);
std::vector<ReportRecord> run_verify(const CommandRequest& request);
std::vector<BenchRecord> run_bench(const CommandRequest& request);

/// Names accepted by `verify --suite` (plus "all").
const std::vector<std::string>& verify_suites();

// Report emitters. JSON is one object per line; CSV has a fixed header row.
std::string to_json(const ReportRecord& record);
std::string to_json(const BenchRecord& record);
void write_report(std::ostream& out, const std::vector<ReportRecord>& records, OutputFormat format);
void write_report(std::ostream& out, const std::vector<BenchRecord>& records, OutputFormat format);

inline constexpr const char* kReportCsvHeader = "name,value,tail_bound,terms_used,elapsed_us,pass,threshold,note";
inline constexpr const char* kBenchCsvHeader =
    "index,method,elapsed_us,cumulative_us,numerator_bits,denominator_bits,cross_equal";

/// kExitOk when every record that carries a pass flag passed, else kExitVerificationFailed.
int verification_exit_code(const std::vector<ReportRecord>& records);

/// Full command execution with exit-code mapping; used by main().
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetaforge::cli
