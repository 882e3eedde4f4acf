#include "zetalab/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zetalab/errors.hpp"

namespace zetalab::report {

namespace {

bool needs_quotes(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

void write_csv_field(std::ostream& out, std::string_view field) {
  if (!needs_quotes(field)) {
    out << field;
    return;
  }
  out << '"';
  for (const char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_json_cell(std::ostream& out, const Cell& cell) {
  if (const auto* text = std::get_if<std::string>(&cell)) {
    out << nlohmann::json(*text).dump();
  } else if (const auto* real = std::get_if<double>(&cell)) {
    if (std::isfinite(*real)) {
      out << format_double(*real);
    } else {
      out << '"' << format_double(*real) << '"';
    }
  } else {
    out << std::get<std::int64_t>(cell);
  }
}

void write_json_object(std::ostream& out, const std::vector<std::string>& columns,
                       const std::vector<Cell>& row) {
  out << "  {";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out << ", ";
    out << nlohmann::json(columns[i]).dump() << ": ";
    write_json_cell(out, row.at(i));
  }
  out << '}';
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                    std::chars_format::general, 17);
  return {buffer.data(), result.ptr};
}

std::string format_cell(const Cell& cell) {
  if (const auto* text = std::get_if<std::string>(&cell)) return *text;
  if (const auto* real = std::get_if<double>(&cell)) return format_double(*real);
  return std::to_string(std::get<std::int64_t>(cell));
}

std::optional<double> parse_double(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || text.empty()) return std::nullopt;
  return value;
}

void write_csv(const Table& table, std::ostream& out, bool with_header) {
  if (with_header) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i > 0) out << ',';
      write_csv_field(out, table.columns[i]);
    }
    out << '\n';
  }
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      write_csv_field(out, format_cell(row[i]));
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r == 0 ? "\n" : ",\n");
    write_json_object(out, table.columns, table.rows[r]);
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write(const Table& table, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

std::string to_string(const Table& table, Format format) {
  std::ostringstream out;
  write(table, format, out);
  return out.str();
}

TextTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_record();
    } else if (c == '\r') {
      // tolerated before LF
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) throw InvalidArgument("parse_csv: unterminated quoted field");
  if (field_started || !record.empty()) end_record();

  TextTable table;
  if (records.empty()) return table;
  table.columns = std::move(records.front());
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  return table;
}

std::string append_json_rows(std::string_view existing, const Table& table) {
  const auto first = existing.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return to_string(table, Format::Json);

  const auto last = existing.find_last_not_of(" \t\r\n");
  if (existing[first] != '[' || existing[last] != ']') {
    throw InvalidArgument("append_json_rows: existing content is not a JSON array");
  }
  std::string_view body = existing.substr(first + 1, last - first - 1);
  const auto body_last = body.find_last_not_of(" \t\r\n");
  const bool empty_array = body_last == std::string_view::npos;

  std::ostringstream out;
  out << '[';
  if (!empty_array) out << body.substr(0, body_last + 1);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << ((empty_array && r == 0) ? "\n" : ",\n");
    write_json_object(out, table.columns, table.rows[r]);
  }
  out << "\n]\n";
  return out.str();
}

}  // namespace zetalab::report
