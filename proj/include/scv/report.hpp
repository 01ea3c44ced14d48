#pragma once

#include <fstream>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "scv/check.hpp"

namespace scv {

enum class ReportFormat { Jsonl, Csv };

ReportFormat parse_report_format(std::string_view name);

/// Serializes reports one record at a time. Destination "-" is stdout.
/// Record fields, in order: prime, check, exponent, lhs, rhs,
/// diff_valuation, pass, elapsed_us.
class ReportWriter {
 public:
  ReportWriter(ReportFormat format, const std::string& destination);
  ReportWriter(ReportFormat format, std::ostream& out);

  void write(const CheckReport& r);
  void flush() { out_->flush(); }

 private:
  void begin();

  ReportFormat format_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

std::string to_jsonl(const CheckReport& r);
/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

void emit_report(std::span<const CheckReport> reports, ReportFormat format, const std::string& destination);

}  // namespace scv
