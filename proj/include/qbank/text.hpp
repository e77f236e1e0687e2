#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qbank {

// Strips leading and trailing ASCII whitespace. This is the only
// normalization applied before choice/answer comparison.
std::string_view trim(std::string_view text);

// Trimmed exact equality of rendered text.
bool same_text(std::string_view a, std::string_view b);

// Converts CRLF and lone CR to LF. XML parsers fold line endings the same way,
// so stored text must already be in this form to survive a round trip.
std::string normalize_newlines(std::string_view text);

// Replaces every non-overlapping occurrence of `from`, scanning left to
// right. Returns the number of replacements.
std::size_t replace_all(std::string& text, std::string_view from, std::string_view to);

std::size_t count_occurrences(std::string_view text, std::string_view needle);

// Escapes &, <, > and " for HTML/XML text and attribute values.
std::string html_escape(std::string_view text);

// Shortest decimal string that parses back to the same double ("3", "-5",
// "0.01", "1e+20").
std::string format_number(double value);

// Fraction with at most five decimals and no trailing zeros ("100",
// "-33.33333", "0").
std::string format_fraction(double value);

double round_to_5_decimals(double value);

// Canonical text form of the values scripts pass as choices, answers and keys.
inline std::string to_text(std::string_view s) { return std::string(s); }
inline std::string to_text(const std::string& s) { return s; }
inline std::string to_text(const char* s) { return s; }

std::string to_text(double value);

inline std::string to_text(float value) { return to_text(static_cast<double>(value)); }

template <std::integral T>
  requires(!std::same_as<T, bool> && !std::same_as<T, char>)
std::string to_text(T value)
{
  return std::to_string(value);
}

template <typename... Ts>
std::string to_text(const std::tuple<Ts...>& tuple);

template <typename A, typename B>
std::string to_text(const std::pair<A, B>& pair)
{
  return "(" + to_text(pair.first) + ", " + to_text(pair.second) + ")";
}

template <typename... Ts>
std::string to_text(const std::tuple<Ts...>& tuple)
{
  std::string out = "(";
  std::apply(
    [&out](const auto&... items) {
      std::size_t i = 0;
      ((out += (i++ ? ", " : "") + to_text(items)), ...);
    },
    tuple);
  return out + ")";
}

template <typename T>
concept Renderable = requires(const T& value) {
  { to_text(value) } -> std::convertible_to<std::string>;
};

template <Renderable T>
std::vector<std::string> to_texts(const std::vector<T>& values)
{
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& value : values) {
    out.push_back(to_text(value));
  }
  return out;
}

} // namespace qbank
