#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "zetaforge/cli.hpp"

namespace zetaforge::cli {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string fixed_us(double us) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << us;
  return os.str();
}

nlohmann::ordered_json record_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["value"] = r.value;
  j["tail_bound"] = r.tail_bound;
  j["terms_used"] = r.terms_used;
  j["elapsed_us"] = r.elapsed_us;
  if (r.pass) j["pass"] = *r.pass;
  if (r.threshold) j["threshold"] = *r.threshold;
  if (r.note) j["note"] = *r.note;
  return j;
}

}  // namespace

std::string to_json(const ReportRecord& record) { return record_json(record).dump(); }

std::string to_json(const BenchRecord& record) {
  nlohmann::ordered_json j;
  j["index"] = record.index;
  j["method"] = std::string(to_string(record.method));
  j["elapsed_us"] = record.elapsed_us;
  j["cumulative_us"] = record.cumulative_us;
  j["numerator_bits"] = record.numerator_bits;
  j["denominator_bits"] = record.denominator_bits;
  if (record.cross_equal) j["cross_equal"] = *record.cross_equal;
  return j.dump();
}

void write_report(std::ostream& out, const std::vector<ReportRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      for (const auto& r : records) out << to_json(r) << '\n';
      break;
    case OutputFormat::csv:
      out << kReportCsvHeader << '\n';
      for (const auto& r : records) {
        out << csv_field(r.name) << ',' << csv_field(r.value) << ',' << csv_field(r.tail_bound) << ','
            << r.terms_used << ',' << r.elapsed_us << ',' << (r.pass ? (*r.pass ? "true" : "false") : "") << ','
            << csv_field(r.threshold.value_or("")) << ',' << csv_field(r.note.value_or("")) << '\n';
      }
      break;
    case OutputFormat::plain:
      for (const auto& r : records) {
        if (r.pass) out << (*r.pass ? "[PASS] " : "[FAIL] ");
        out << r.name << " = " << r.value;
        if (r.tail_bound != "0") out << "  (tail bound " << r.tail_bound << ")";
        if (r.threshold) out << "  threshold " << *r.threshold;
        if (r.terms_used != 0) out << "  terms " << r.terms_used;
        out << "  " << r.elapsed_us << " us";
        if (r.note) out << "  note: " << *r.note;
        out << '\n';
      }
      break;
  }
}

void write_report(std::ostream& out, const std::vector<BenchRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      for (const auto& r : records) out << to_json(r) << '\n';
      break;
    case OutputFormat::csv:
    case OutputFormat::plain:
      // Bench output is tabular either way.
      out << kBenchCsvHeader << '\n';
      for (const auto& r : records) {
        out << r.index << ',' << to_string(r.method) << ',' << fixed_us(r.elapsed_us) << ','
            << fixed_us(r.cumulative_us) << ',' << r.numerator_bits << ',' << r.denominator_bits << ','
            << (r.cross_equal ? (*r.cross_equal ? "true" : "false") : "") << '\n';
      }
      break;
  }
}

}  // namespace zetaforge::cli
