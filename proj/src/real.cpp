#include "superosc/real.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace superosc {

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

template <>
double parse_real<double>(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "pi") return pi<double>();
  if (text == "-pi") return -pi<double>();
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("not a number: '" + raw + "'");
  }
  return value;
}

template <>
HighPrecision parse_real<HighPrecision>(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "pi") return pi<HighPrecision>();
  if (text == "-pi") return -pi<HighPrecision>();
  // Validate the syntax with the double parser's grammar first; MPFR accepts
  // a few forms (hex, "@inf@") that the document format does not allow.
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  bool digits = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    digits = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      digits = true;
    }
  }
  if (digits && pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    bool exp_digits = false;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      exp_digits = true;
    }
    if (!exp_digits) digits = false;
  }
  if (!digits || pos != text.size()) {
    throw std::invalid_argument("not a number: '" + raw + "'");
  }
  return HighPrecision(text);
}

template <>
std::string to_decimal_string<double>(const double& value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::scientific);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  return std::string(buffer, ptr);
}

template <>
std::string to_decimal_string<HighPrecision>(const HighPrecision& value) {
  // Enough digits to round-trip at the value's own binary precision.
  const auto bits = mpfr_get_prec(value.backend().data());
  const auto digits = static_cast<std::streamsize>(
      1 + static_cast<long>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)));
  return value.str(digits, std::ios_base::scientific);
}

}  // namespace superosc
