#include <charconv>
#include <cmath>
#include <string>

#include "zetalab/harness.hpp"

namespace zetalab::harness {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

// Finite real with an optional leading '+'.
std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') return std::nullopt;
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Imaginary coefficient: "", "+", "-" mean +-1.
std::optional<double> parse_imag(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view text, Parse parse, const char* what) {
  std::vector<T> values;
  text = trim(text);
  if (text.empty()) throw UsageError(std::string(what) + ": empty list");
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    const auto value = parse(token);
    if (!value) {
      throw UsageError(std::string(what) + ": malformed entry '" + std::string(token) + "'");
    }
    values.push_back(*value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  const auto body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_imag(body);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  const auto re = parse_real(body.substr(0, split));
  const auto im = parse_imag(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::vector<double> parse_real_list(std::string_view text) {
  return parse_list<double>(text, parse_real, "real list");
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  auto parse = [](std::string_view token) -> std::optional<std::int64_t> {
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto result = std::from_chars(token.data(), end, value);
    if (!token.empty() && result.ec == std::errc() && result.ptr == end) return value;
    const auto real = parse_real(token);
    if (!real || std::floor(*real) != *real || std::abs(*real) > 9.0e15) return std::nullopt;
    return static_cast<std::int64_t>(*real);
  };
  return parse_list<std::int64_t>(text, parse, "integer list");
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  if (text.find(':') == std::string_view::npos) return parse_real_list(text);

  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw UsageError("grid: expected start:stop:step");
  }
  const auto start = parse_real(trim(text.substr(0, first)));
  const auto stop = parse_real(trim(text.substr(first + 1, second - first - 1)));
  const auto step = parse_real(trim(text.substr(second + 1)));
  if (!start || !stop || !step) throw UsageError("grid: malformed start:stop:step");
  if (!(*step > 0.0) || *stop < *start) {
    throw UsageError("grid: need step > 0 and start <= stop");
  }
  const double intervals = std::floor((*stop - *start) / *step + 1e-9);
  if (intervals > 1e6) throw UsageError("grid: too many points");
  std::vector<double> values;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(intervals); ++i) {
    values.push_back(*start + static_cast<double>(i) * *step);
  }
  return values;
}

}  // namespace zetalab::harness
