#include "qbank/text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace qbank {

namespace {

bool is_space(char c)
{
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

} // namespace

std::string_view trim(std::string_view text)
{
  while (!text.empty() && is_space(text.front())) {
    text.remove_prefix(1);
  }
  while (!text.empty() && is_space(text.back())) {
    text.remove_suffix(1);
  }
  return text;
}

bool same_text(std::string_view a, std::string_view b)
{
  return trim(a) == trim(b);
}

std::string normalize_newlines(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out += '\n';
      if (i + 1 < text.size() && text[i + 1] == '\n') {
        ++i;
      }
    } else {
      out += text[i];
    }
  }
  return out;
}

std::size_t replace_all(std::string& text, std::string_view from, std::string_view to)
{
  if (from.empty()) {
    return 0;
  }
  std::size_t count = 0;
  std::string out;
  std::size_t start = 0;
  for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, start)) {
    out.append(text, start, pos - start);
    out.append(to);
    start = pos + from.size();
    ++count;
  }
  if (count > 0) {
    out.append(text, start, std::string::npos);
    text = std::move(out);
  }
  return count;
}

std::size_t count_occurrences(std::string_view text, std::string_view needle)
{
  if (needle.empty()) {
    return 0;
  }
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string html_escape(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string format_number(double value)
{
  if (value == 0.0) {
    return "0"; // also folds -0
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    return std::to_string(value);
  }
  return std::string(buf.data(), end);
}

double round_to_5_decimals(double value)
{
  double rounded = std::round(value * 1e5) / 1e5;
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string format_fraction(double value)
{
  std::array<char, 64> buf{};
  int n = std::snprintf(buf.data(), buf.size(), "%.5f", round_to_5_decimals(value));
  std::string out(buf.data(), static_cast<std::size_t>(n));
  while (out.back() == '0') {
    out.pop_back();
  }
  if (out.back() == '.') {
    out.pop_back();
  }
  return out == "-0" ? "0" : out;
}

std::string to_text(double value)
{
  return format_number(value);
}

} // namespace qbank
