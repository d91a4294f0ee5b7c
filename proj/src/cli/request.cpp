#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "zetaforge/cli.hpp"

namespace zetaforge::cli {

namespace {

StrategyTag parse_strategy(const std::string& text) {
  if (text == "accelerated") return StrategyTag::accelerated;
  if (text == "direct") return StrategyTag::direct;
  throw UsageError("unknown strategy '" + text + "' (expected direct|accelerated)");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw UsageError("unknown format '" + text + "' (expected json|csv|plain)");
}

OddZetaForm parse_form(const std::string& text) {
  if (text == "eq9") return OddZetaForm::eq9;
  if (text == "eq13a") return OddZetaForm::eq13a;
  throw UsageError("unknown form '" + text + "' (expected eq9|eq13a)");
}

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return value;
}

}  // namespace

std::optional<CommandRequest> parse_request(int argc, const char* const* argv, std::ostream& help_out) {
  CommandRequest request;
  std::string strategy = "accelerated";
  std::string format = "plain";
  std::string form = "eq9";
  std::string range;
  long prec_bits = request.prec_bits;
  long max_terms = static_cast<long>(request.max_terms);
  long max_m = static_cast<long>(request.max_m);
  long odd_m = 0;
  long even_m = 0;
  long index = 0;

  CLI::App app{"zetaforge: Riemann zeta series, Bernoulli recursions and identity checks"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--prec-bits", prec_bits, "working precision in bits [8, 16384]");
  app.add_option("--strategy", strategy, "series summation: direct|accelerated");
  app.add_option("--max-terms", max_terms, "maximum series terms (also capped by ZETAFORGE_MAX_TERMS)");
  app.add_option("--format", format, "output format: json|csv|plain");
  app.add_option("--out", request.out, "write the report to this file instead of stdout");

  CLI::App* compute = app.add_subcommand("compute", "evaluate one zeta value");
  compute->add_option("--s", request.s, "real argument of zeta");
  auto* odd_opt = compute->add_option("--odd-m", odd_m, "zeta(2m+1) from the odd-argument series");
  auto* even_opt = compute->add_option("--even-m", even_m, "zeta(2m) from the finite even-argument form");
  compute->add_option("--form", form, "odd-argument form: eq9|eq13a");
  compute->add_option("--epsilon", request.epsilon, "absolute target for direct summation");

  CLI::App* bernoulli = app.add_subcommand("bernoulli", "exact Bernoulli numbers");
  auto* index_opt = bernoulli->add_option("--index", index, "index k of B_k");
  bernoulli->add_option("--range", range, "inclusive index range FIRST:LAST");
  bernoulli->add_option("--method", request.method, "milgram|euler|both");

  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", request.suites, "suites to run (comma separated, or 'all')")->delimiter(',');
  verify->add_option("--max-m", max_m, "largest m checked");

  CLI::App* bench = app.add_subcommand("bench", "time both Bernoulli recursions");
  bench->add_option("--max-index", request.max_index, "largest even index (<= 2000)");
  bench->add_option("--methods", request.methods, "milgram|euler|both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    help_out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (compute->parsed()) request.subcommand = Subcommand::compute;
  if (bernoulli->parsed()) request.subcommand = Subcommand::bernoulli;
  if (verify->parsed()) request.subcommand = Subcommand::verify;
  if (bench->parsed()) request.subcommand = Subcommand::bench;

  request.strategy = parse_strategy(strategy);
  request.format = parse_format(format);
  request.form = parse_form(form);
  request.prec_bits = prec_bits;
  if (max_terms <= 0) throw UsageError("--max-terms must be positive");
  request.max_terms = static_cast<unsigned long>(max_terms);
  if (max_m <= 0) throw UsageError("--max-m must be positive");
  request.max_m = static_cast<unsigned long>(max_m);
  if (odd_opt->count() != 0) {
    if (odd_m <= 0) throw UsageError("--odd-m must be a positive integer");
    request.odd_m = static_cast<unsigned long>(odd_m);
  }
  if (even_opt->count() != 0) {
    if (even_m <= 0) throw UsageError("--even-m must be a positive integer");
    request.even_m = static_cast<unsigned long>(even_m);
  }
  if (index_opt->count() != 0) request.index = index;
  if (!range.empty()) {
    const auto colon = range.find(':');
    if (colon == std::string::npos) throw UsageError("--range expects FIRST:LAST");
    request.range_first = parse_long(range.substr(0, colon), "range start");
    request.range_last = parse_long(range.substr(colon + 1), "range end");
  }
  validate(request);
  return request;
}

void validate(const CommandRequest& request) {
  if (request.prec_bits < kMinPrecBits || request.prec_bits > kMaxPrecBits) {
    throw UsageError("--prec-bits must lie in [8, 16384], got " + std::to_string(request.prec_bits));
  }
  switch (request.subcommand) {
    case Subcommand::compute: {
      const int targets = static_cast<int>(request.s.has_value()) + static_cast<int>(request.odd_m.has_value()) +
                          static_cast<int>(request.even_m.has_value());
      if (targets != 1) throw UsageError("compute needs exactly one of --s, --odd-m, --even-m");
      break;
    }
    case Subcommand::bernoulli: {
      if (request.index.has_value() == (request.range_first.has_value())) {
        throw UsageError("bernoulli needs exactly one of --index, --range");
      }
      if (request.method != "euler" && request.method != "milgram" && request.method != "both") {
        throw UsageError("unknown method '" + request.method + "' (expected milgram|euler|both)");
      }
      const long first = request.index.value_or(request.range_first.value_or(0));
      const long last = request.index.value_or(request.range_last.value_or(0));
      if (first < 0 || last < 0) throw UsageError("negative Bernoulli index");
      if (last < first) throw UsageError("empty range " + std::to_string(first) + ":" + std::to_string(last));
      break;
    }
    case Subcommand::verify:
      for (const auto& suite : request.suites) {
        if (suite == "all") continue;
        const auto& known = verify_suites();
        if (std::find(known.begin(), known.end(), suite) == known.end()) {
          throw UsageError("unknown suite '" + suite + "'");
        }
      }
      break;
    case Subcommand::bench:
      if (request.max_index < 0 || request.max_index > static_cast<long>(kMaxBenchIndex)) {
        throw UsageError("--max-index must lie in [0, 2000]");
      }
      if (request.methods != "euler" && request.methods != "milgram" && request.methods != "both") {
        throw UsageError("unknown methods '" + request.methods + "' (expected milgram|euler|both)");
      }
      break;
  }
}

unsigned long effective_max_terms(const CommandRequest& request) {
  unsigned long cap = kDefaultMaxTerms;
  if (const char* env = std::getenv("ZETAFORGE_MAX_TERMS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0) {
      throw UsageError(std::string("ZETAFORGE_MAX_TERMS must be a positive integer, got '") + env + "'");
    }
    cap = static_cast<unsigned long>(parsed);
  }
  return std::min(request.max_terms, cap);
}

}  // namespace zetaforge::cli
