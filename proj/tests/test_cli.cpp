#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zetaforge/cli.hpp"

using namespace zetaforge;
using namespace zetaforge::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zetaforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

CommandRequest parse(std::vector<std::string> args) {
  args.insert(args.begin(), "zetaforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream help;
  return parse_request(static_cast<int>(argv.size()), argv.data(), help).value();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("request parsing") {
  const CommandRequest r = parse({"compute", "--s", "1.5", "--prec-bits", "200", "--strategy", "direct"});
  CHECK(r.subcommand == Subcommand::compute);
  CHECK(r.s == "1.5");
  CHECK(r.prec_bits == 200);
  CHECK(r.strategy == StrategyTag::direct);

  const CommandRequest v = parse({"verify", "--suite", "eq2,eq5", "--max-m", "3", "--format", "json"});
  CHECK(v.suites == std::vector<std::string>{"eq2", "eq5"});
  CHECK(v.max_m == 3);
  CHECK(v.format == OutputFormat::json);

  const CommandRequest b = parse({"bernoulli", "--range", "2:10", "--method", "both"});
  CHECK(b.range_first == 2);
  CHECK(b.range_last == 10);

  CHECK_THROWS_AS(parse({"compute", "--s", "2.5", "--odd-m", "1"}), UsageError);
  CHECK_THROWS_AS(parse({"compute"}), UsageError);
  CHECK_THROWS_AS(parse({"compute", "--s", "2.5", "--prec-bits", "7"}), UsageError);
  CHECK_THROWS_AS(parse({"compute", "--s", "2.5", "--prec-bits", "16385"}), UsageError);
  CHECK_THROWS_AS(parse({"compute", "--s", "2.5", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse({"bernoulli", "--index", "2", "--range", "2:4"}), UsageError);
  CHECK_THROWS_AS(parse({"bench", "--max-index", "2002"}), UsageError);
  CHECK_THROWS_AS(parse({"frobnicate"}), UsageError);
  CHECK(parse({"compute", "--s", "2.5", "--prec-bits", "16384"}).prec_bits == 16384);
}

TEST_CASE("compute examples") {
  const ReportRecord a = run_compute(parse({"compute", "--s", "1.5", "--prec-bits", "128", "--strategy", "accelerated"}));
  CHECK(starts_with(a.value, "2.61237534868548834334856756792407163057"));
  CHECK_FALSE(a.pass.has_value());
  CHECK(a.terms_used > 0);

  const ReportRecord e = run_compute(parse({"compute", "--even-m", "1", "--prec-bits", "64"}));
  CHECK(starts_with(e.value, "1.64493406684822643"));

  const ReportRecord o = run_compute(parse({"compute", "--odd-m", "1", "--form", "eq13a", "--prec-bits", "192"}));
  CHECK(starts_with(o.value, "1.2020569031595942853997381615114499907649862923"));

  // Integer s is routed to the integer paths.
  CHECK(run_compute(parse({"compute", "--s", "3", "--prec-bits", "192"})).value == o.value);
  CHECK(starts_with(run_compute(parse({"compute", "--s", "4"})).value, "1.08232323371113819151"));

  const Run pole = run({"compute", "--s", "1"});
  CHECK(pole.code == kExitUsage);
  CHECK(pole.err.find("pole at s=1") != std::string::npos);
  CHECK(lines(pole.err).size() == 1);

  CHECK(run({"compute", "--s", "-2.5"}).code == kExitUsage);
  CHECK(run({"compute", "--s", "2.0001"}).code == kExitUsage);
  CHECK(run({"compute", "--s", "abc"}).code == kExitUsage);
}

TEST_CASE("decimal values round-trip to the computed BigReal") {
  const ReportRecord r = run_compute(parse({"compute", "--s", "3.7", "--prec-bits", "100"}));
  const BigReal parsed = BigReal::parse(r.value, 100);
  CHECK(BigReal::parse(parsed.to_string(), 100) == parsed);
  CHECK(parsed.to_string() == r.value);
}

TEST_CASE("bernoulli examples") {
  const auto both = run_bernoulli(parse({"bernoulli", "--index", "12", "--method", "both"}));
  REQUIRE(both.size() == 1);
  CHECK(both[0].value == "-691/2730");
  CHECK(both[0].pass == true);

  CHECK(run_bernoulli(parse({"bernoulli", "--index", "2", "--method", "milgram"}))[0].value == "1/6");
  CHECK(run_bernoulli(parse({"bernoulli", "--index", "0"}))[0].value == "1");

  const auto odd = run_bernoulli(parse({"bernoulli", "--index", "7"}));
  CHECK(odd[0].value == "0");
  CHECK(odd[0].note.has_value());

  const auto range = run_bernoulli(parse({"bernoulli", "--range", "0:20", "--method", "both"}));
  CHECK(range.size() == 21);
  CHECK(range[16].value == "-3617/510");
  CHECK(range[20].value == "-174611/330");

  CHECK(run({"bernoulli", "--index", "-2"}).code == kExitUsage);
  CHECK(run({"bernoulli", "--index", "12", "--method", "both"}).code == kExitOk);
}

TEST_CASE("verify examples") {
  const auto eq5 = run_verify(parse({"verify", "--suite", "eq5", "--max-m", "100"}));
  REQUIRE(eq5.size() == 100);
  for (const auto& r : eq5) {
    CHECK(r.value == "0");
    CHECK(r.pass == true);
  }

  const auto eq2 = run_verify(parse({"verify", "--suite", "eq2", "--prec-bits", "256"}));
  REQUIRE(eq2.size() == 1);
  CHECK(eq2[0].pass == true);
  CHECK(std::fabs(std::stod(eq2[0].value)) <= 1e-50);

  const auto eq13b = run_verify(parse({"verify", "--suite", "eq13b", "--max-m", "10", "--prec-bits", "256"}));
  REQUIRE(eq13b.size() == 10);
  for (const auto& r : eq13b) CHECK(r.pass == true);

  const Run bad = run({"verify", "--suite", "eq99"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("UsageError") != std::string::npos);

  CHECK(run({"verify", "--suite", "all", "--max-m", "3"}).code == kExitOk);
}

TEST_CASE("exit code mapping for verification results") {
  std::vector<ReportRecord> records(2);
  CHECK(verification_exit_code(records) == kExitOk);
  records[0].pass = true;
  CHECK(verification_exit_code(records) == kExitOk);
  records[1].pass = false;
  CHECK(verification_exit_code(records) == kExitVerificationFailed);
}

TEST_CASE("bench examples") {
  const auto rows = run_bench(parse({"bench", "--max-index", "200", "--methods", "both"}));
  CHECK(rows.size() == 200);
  double last_euler = 0.0;
  double last_milgram = 0.0;
  for (const auto& r : rows) {
    CHECK(r.cross_equal == true);
    CHECK(r.elapsed_us > 0.0);
    double& last = r.method == BernoulliMethod::euler ? last_euler : last_milgram;
    CHECK(r.cumulative_us >= last);
    last = r.cumulative_us;
  }
  CHECK(rows[5].index == 12);
  CHECK(rows[5].numerator_bits == 10);  // 691
  CHECK(rows[5].denominator_bits == 12);  // 2730

  CHECK(run_bench(parse({"bench", "--max-index", "0"})).empty());
  const Run empty = run({"bench", "--max-index", "0", "--format", "json"});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out.empty());
}

TEST_CASE("JSON output is newline-delimited and schema-stable") {
  const Run v = run({"verify", "--suite", "eq5,eq3", "--max-m", "3", "--format", "json"});
  CHECK(v.code == kExitOk);
  const auto ls = lines(v.out);
  REQUIRE(ls.size() == 6);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    for (const char* key : {"name", "value", "tail_bound", "terms_used", "elapsed_us", "pass"}) CHECK(j.contains(key));
    CHECK(j["pass"].is_boolean());
  }
  const Run c = run({"compute", "--s", "2.5", "--format", "json"});
  const auto j = nlohmann::json::parse(lines(c.out).at(0));
  CHECK_FALSE(j.contains("pass"));
  CHECK(j["value"].is_string());
  CHECK(j["tail_bound"].is_string());

  const Run b = run({"bench", "--max-index", "4", "--format", "json"});
  for (const auto& l : lines(b.out)) {
    const auto row = nlohmann::json::parse(l);
    for (const char* key : {"index", "method", "elapsed_us", "cumulative_us", "numerator_bits", "denominator_bits"}) {
      CHECK(row.contains(key));
    }
  }
}

TEST_CASE("CSV output has fixed headers and RFC quoting") {
  const Run v = run({"verify", "--suite", "eq5", "--max-m", "2", "--format", "csv"});
  const auto ls = lines(v.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == kReportCsvHeader);
  CHECK(starts_with(ls[1], "eq5[m=1],0,0,0,"));

  const Run b = run({"bench", "--max-index", "4", "--format", "csv"});
  CHECK(lines(b.out).at(0) == kBenchCsvHeader);
  CHECK(lines(b.out).size() == 5);

  ReportRecord r;
  r.name = "x";
  r.value = "1";
  r.note = "a, \"quoted\" note";
  std::ostringstream os;
  write_report(os, {r}, OutputFormat::csv);
  CHECK(lines(os.str()).at(1) == "x,1,0,0,0,,,\"a, \"\"quoted\"\" note\"");
}

TEST_CASE("identical requests give identical values") {
  const auto strip_time = [](const std::string& json) {
    auto j = nlohmann::json::parse(json);
    j.erase("elapsed_us");
    return j.dump();
  };
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compute", "--s", "6.3", "--prec-bits", "300", "--format", "json"},
           {"compute", "--odd-m", "3", "--format", "json"},
           {"verify", "--suite", "eq1-oracle", "--format", "json"}}) {
    const auto a = lines(run(args).out);
    const auto b = lines(run(args).out);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(strip_time(a[i]) == strip_time(b[i]));
  }
}

TEST_CASE("--out writes the report file") {
  const auto path = std::filesystem::temp_directory_path() / "zetaforge_cli_test.csv";
  std::filesystem::remove(path);
  const Run r = run({"bernoulli", "--index", "12", "--format", "csv", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kReportCsvHeader);
  std::filesystem::remove(path);
}

TEST_CASE("ZETAFORGE_MAX_TERMS caps series length") {
  ::setenv("ZETAFORGE_MAX_TERMS", "25", 1);
  const ReportRecord r = run_compute(parse({"compute", "--s", "1.5", "--strategy", "direct", "--epsilon", "1e-30"}));
  CHECK(r.terms_used <= 25);
  ::setenv("ZETAFORGE_MAX_TERMS", "lots", 1);
  CHECK(run({"compute", "--s", "1.5"}).code == kExitUsage);
  ::unsetenv("ZETAFORGE_MAX_TERMS");
  CHECK(effective_max_terms(parse({"compute", "--s", "1.5", "--max-terms", "77"})) == 77);
}

TEST_CASE("help exits cleanly") {
  const Run h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("compute") != std::string::npos);
}
