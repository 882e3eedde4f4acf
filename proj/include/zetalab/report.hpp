#pragma once

// Flat tabular artifacts: CSV (RFC 4180 quoting, header row, LF endings) and
// JSON (array of row objects with the CSV column names as keys). Doubles are
// written with 17 significant digits so every binary64 value survives a
// round trip; non-finite values are written as nan / inf / -inf (quoted
// strings in JSON).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zetalab::report {

using Cell = std::variant<std::string, double, std::int64_t>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view name);

std::string format_double(double value);
std::string format_cell(const Cell& cell);

/// Accepts everything format_double produces. Empty on malformed input.
std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);

void write_csv(const Table& table, std::ostream& out, bool with_header = true);
void write_json(const Table& table, std::ostream& out);
void write(const Table& table, Format format, std::ostream& out);

std::string to_string(const Table& table, Format format);

/// Parses CSV text back into string cells. The first record is the header.
/// Throws InvalidArgument on unterminated quotes.
struct TextTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

TextTable parse_csv(std::string_view text);

/// Appends one JSON object per row to an existing JSON array text (or starts
/// a new array when `existing` is blank). Throws InvalidArgument if
/// `existing` is not a JSON array.
std::string append_json_rows(std::string_view existing, const Table& table);

}  // namespace zetalab::report
