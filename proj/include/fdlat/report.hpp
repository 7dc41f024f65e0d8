#pragma once

// Table rendering and decimal display of exact values.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdlat/bigcomb.hpp"

namespace fdlat {

struct ScientificString {
  std::string mantissa;       // "1.562662"; digits only when sig = 1
  std::int64_t exponent = 0;  // base 10

  /// "1.562662e88", or just the mantissa when the exponent is 0.
  std::string str() const;
  /// Significant digits of the mantissa as an integer (1562662).
  Natural digits() const;
};

/// x rounded to sig significant digits, halves rounded up.  x = 0 gives
/// mantissa "0" and exponent 0.
ScientificString format_scientific(const Natural& x, int sig);

/// num / den rounded to sig significant digits, halves rounded up.
ScientificString format_ratio(const Natural& num, const Natural& den, int sig);

enum class TableId { kT51, kT52, kT53, kT54, kT55 };
enum class Format { kText, kCsv, kJson };

std::string to_string(TableId id);
TableId parse_table_id(const std::string& text);  // throws ConstraintError
Format parse_format(const std::string& text);     // throws ConstraintError

enum class Column { kFlat, kGStar, kGDoubleStar, kGUpper };
std::string to_string(Column column);

struct TableSpec {
  TableId id = TableId::kT51;
  std::int64_t r = 3;
  std::int64_t n_lo = 3;
  std::int64_t n_hi = 20;
  std::vector<Column> columns;
  int sig = 0;        // significant digits of the scientific display; 0 = none
  int ratio_sig = 0;  // g_doublestar / flat shown with this many digits; 0 = none

  static TableSpec standard(TableId id);
};

struct TableRow {
  std::int64_t n = 0;
  std::map<Column, Natural> values;
  std::optional<ScientificString> ratio;
};

std::vector<TableRow> compute_table(const TableSpec& spec, unsigned jobs = 1);
std::string render_table(const TableSpec& spec, const std::vector<TableRow>& rows, Format format);
std::string emit_table(const TableSpec& spec, Format format, unsigned jobs = 1);

}  // namespace fdlat
