#include "zeta/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace zeta::cli {

OutputRecord& OutputRecord::add(std::string key, double value) {
  payload.emplace_back(std::move(key), value);
  return *this;
}

OutputRecord& OutputRecord::add(std::string key, std::string value) {
  payload.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  return std::nullopt;
}

namespace {

std::string csv_cell(const FieldValue& v) {
  if (const double* d = std::get_if<double>(&v)) return format_number(*d);
  return std::get<std::string>(v);
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string json_value(const FieldValue& v) {
  if (const double* d = std::get_if<double>(&v))
    return std::isfinite(*d) ? format_number(*d) : "null";
  return json_string(std::get<std::string>(v));
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records,
               const std::vector<std::string>& header) {
  std::vector<std::string> keys = header;
  if (!records.empty()) {
    keys.clear();
    for (const auto& [key, value] : records.front().payload) keys.push_back(key);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < rec.payload.size(); ++i)
      out << (i ? "," : "") << csv_cell(rec.payload[i].second);
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  if (records.empty()) {
    out << "[]\n";
    return;
  }
  out << "[\n";
  for (std::size_t r = 0; r < records.size(); ++r) {
    out << "  {";
    const auto& payload = records[r].payload;
    for (std::size_t i = 0; i < payload.size(); ++i)
      out << (i ? ", " : "") << json_string(payload[i].first) << ": " << json_value(payload[i].second);
    out << (r + 1 < records.size() ? "},\n" : "}\n");
  }
  out << "]\n";
}

void write_records(std::ostream& out, Format format, const std::vector<OutputRecord>& records,
                   const std::vector<std::string>& header) {
  if (format == Format::json) write_json(out, records);
  else write_csv(out, records, header);
}

}  // namespace zeta::cli
