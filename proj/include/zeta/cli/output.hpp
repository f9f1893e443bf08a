// Tabular output records rendered as CSV or JSON.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace zeta::cli {

enum class RecordKind { eval, zero, residual };
enum class Format { csv, json };

using FieldValue = std::variant<double, std::string>;

struct OutputRecord {
  RecordKind kind = RecordKind::eval;
  std::vector<std::pair<std::string, FieldValue>> payload;

  OutputRecord& add(std::string key, double value);
  OutputRecord& add(std::string key, std::string value);
};

/// 15 significant digits, shortest of fixed/scientific, '.' separator
/// regardless of the global locale.
std::string format_number(double x);

/// Locale-independent parse of the whole string; nullopt on trailing junk.
std::optional<double> parse_number(std::string_view text);

std::optional<Format> parse_format(std::string_view text);

/// CSV: header row from the first record's keys, comma separated, LF endings.
/// `header` is used when there are no records.
void write_csv(std::ostream& out, const std::vector<OutputRecord>& records,
               const std::vector<std::string>& header);

/// JSON: an array of flat objects, one per record, keys in payload order.
void write_json(std::ostream& out, const std::vector<OutputRecord>& records);

void write_records(std::ostream& out, Format format, const std::vector<OutputRecord>& records,
                   const std::vector<std::string>& header);

}  // namespace zeta::cli
