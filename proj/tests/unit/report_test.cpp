#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "zetalab/errors.hpp"
#include "zetalab/report.hpp"

using namespace zetalab::report;

namespace {

Table sample_table() {
  Table table;
  table.columns = {"name", "x", "n"};
  table.rows.push_back({Cell{std::string("plain")}, Cell{0.1}, Cell{std::int64_t{3}}});
  table.rows.push_back({Cell{std::string("with,comma")}, Cell{-1e-300}, Cell{std::int64_t{-7}}});
  table.rows.push_back({Cell{std::string("say \"hi\"\nthere")},
                        Cell{std::numeric_limits<double>::quiet_NaN()}, Cell{std::int64_t{0}}});
  table.rows.push_back({Cell{std::string("")}, Cell{-std::numeric_limits<double>::infinity()},
                        Cell{std::int64_t{1} << 60}});
  return table;
}

bool same_double(double a, double b) {
  return std::isnan(a) ? std::isnan(b) : std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("17 significant digits survive a round trip") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 20000; ++i) {
    const double x = std::bit_cast<double>(rng());
    if (!std::isfinite(x)) continue;
    const auto parsed = parse_double(format_double(x));
    REQUIRE(parsed.has_value());
    CHECK(same_double(*parsed, x));
  }
  for (const double x : {0.0, -0.0, 1.0, 0.1, 1e-320, std::numeric_limits<double>::max()}) {
    CHECK(same_double(*parse_double(format_double(x)), x));
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(std::isnan(*parse_double("nan")));
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double("1.5x").has_value());
  CHECK(parse_int("-42") == -42);
  CHECK_FALSE(parse_int("4.2").has_value());
}

TEST_CASE("csv layout") {
  const auto text = to_string(sample_table(), Format::Csv);
  CHECK(text.rfind("name,x,n\nplain,0.10000000000000001,3\n", 0) == 0);
  CHECK(text.find("\"with,comma\"") != std::string::npos);
  CHECK(text.find("\"say \"\"hi\"\"\nthere\"") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("csv round trip") {
  const auto table = sample_table();
  const auto parsed = parse_csv(to_string(table, Format::Csv));
  CHECK(parsed.columns == table.columns);
  REQUIRE(parsed.rows.size() == table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    REQUIRE(parsed.rows[r].size() == table.rows[r].size());
    CHECK(parsed.rows[r][0] == std::get<std::string>(table.rows[r][0]));
    CHECK(same_double(*parse_double(parsed.rows[r][1]), std::get<double>(table.rows[r][1])));
    CHECK(parse_int(parsed.rows[r][2]) == std::get<std::int64_t>(table.rows[r][2]));
  }
  CHECK_THROWS_AS(parse_csv("a,b\n\"open"), zetalab::InvalidArgument);
}

TEST_CASE("json mirrors the csv columns") {
  const auto table = sample_table();
  const auto json = nlohmann::json::parse(to_string(table, Format::Json));
  REQUIRE(json.is_array());
  REQUIRE(json.size() == table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = json[r];
    CHECK(row.size() == table.columns.size());
    CHECK(row["name"].get<std::string>() == std::get<std::string>(table.rows[r][0]));
    const double x = std::get<double>(table.rows[r][1]);
    if (std::isfinite(x)) {
      CHECK(same_double(row["x"].get<double>(), x));
    } else {
      CHECK(same_double(*parse_double(row["x"].get<std::string>()), x));
    }
    CHECK(row["n"].get<std::int64_t>() == std::get<std::int64_t>(table.rows[r][2]));
  }
  std::vector<std::string> keys;
  for (const auto& item : json[0].items()) keys.push_back(item.key());
  CHECK(keys.size() == 3);
  const auto text = to_string(table, Format::Json);
  CHECK(text.find("\"name\"") < text.find("\"x\""));
  CHECK(text.find("\"x\"") < text.find("\"n\""));
  CHECK(to_string(Table{{"a"}, {}}, Format::Json) == "[]\n");
}

TEST_CASE("json append") {
  auto table = sample_table();
  const auto first = to_string(table, Format::Json);
  const auto merged = append_json_rows(first, table);
  CHECK(nlohmann::json::parse(merged).size() == 2 * table.rows.size());
  CHECK(append_json_rows("", table) == first);
  CHECK(nlohmann::json::parse(append_json_rows("[]\n", table)).size() == table.rows.size());
  CHECK_THROWS_AS(append_json_rows("{}", table), zetalab::InvalidArgument);
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_FALSE(parse_format("xml").has_value());
}
