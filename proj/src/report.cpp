#include "scv/report.hpp"

#include <iostream>

#include <json.hpp>

#include "scv/errors.hpp"

namespace scv {

ReportFormat parse_report_format(std::string_view name) {
  if (name == "jsonl") return ReportFormat::Jsonl;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigInvalid("unknown report format '" + std::string(name) + "' (jsonl or csv)");
}

std::string to_jsonl(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["prime"] = r.prime;
  j["check"] = std::string(to_string(r.check));
  j["exponent"] = r.exponent;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["diff_valuation"] = r.diff_valuation;
  j["pass"] = r.pass;
  j["elapsed_us"] = r.elapsed_us;
  return j.dump();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ReportWriter::ReportWriter(ReportFormat format, const std::string& destination) : format_(format) {
  if (destination == "-") {
    out_ = &std::cout;
  } else {
    file_ = std::make_unique<std::ofstream>(destination, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + destination + "' for writing");
    out_ = file_.get();
  }
  begin();
}

ReportWriter::ReportWriter(ReportFormat format, std::ostream& out) : format_(format), out_(&out) { begin(); }

void ReportWriter::begin() {
  if (format_ == ReportFormat::Csv) *out_ << "prime,check,exponent,lhs,rhs,diff_valuation,pass,elapsed_us\r\n";
}

void ReportWriter::write(const CheckReport& r) {
  if (format_ == ReportFormat::Jsonl) {
    *out_ << to_jsonl(r) << '\n';
  } else {
    *out_ << r.prime << ',' << csv_field(to_string(r.check)) << ',' << r.exponent << ',' << csv_field(r.lhs) << ','
          << csv_field(r.rhs) << ',' << r.diff_valuation << ',' << (r.pass ? "true" : "false") << ','
          << r.elapsed_us << "\r\n";
  }
  if (!*out_) throw IoError("write failed");
}

void emit_report(std::span<const CheckReport> reports, ReportFormat format, const std::string& destination) {
  ReportWriter writer(format, destination);
  for (const auto& r : reports) writer.write(r);
  writer.flush();
}

}  // namespace scv
