#include "qbank/maintenance.hpp"

#include "qbank/error.hpp"
#include "qbank/text.hpp"

#include <cmath>
#include <iterator>
#include <regex>

namespace qbank {

namespace {

template <typename Edit>
std::size_t edit_all_text(QuestionBank& bank, Edit edit)
{
  BankContent content = bank.snapshot();
  std::size_t count = 0;
  for (auto& question : content.questions) {
    for_each_text(question, [&](std::string& text) { count += edit(text); });
  }
  if (count > 0) {
    bank.replace_content(std::move(content));
  }
  return count;
}

} // namespace

std::size_t replace_text(QuestionBank& bank, std::string_view from, std::string_view to)
{
  if (from.empty()) {
    throw ValidationError("text to replace must not be empty");
  }
  return edit_all_text(bank, [&](std::string& text) { return replace_all(text, from, to); });
}

std::size_t replace_regex(QuestionBank& bank, std::string_view pattern, std::string_view replacement)
{
  if (pattern.empty()) {
    throw ValidationError("pattern must not be empty");
  }
  std::regex re;
  try {
    re = std::regex(pattern.begin(), pattern.end(), std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw ValidationError("invalid regular expression \"" + std::string(pattern) + "\": " + e.what());
  }
  const std::string format(replacement);
  return edit_all_text(bank, [&](std::string& text) -> std::size_t {
    auto n = static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                    std::sregex_iterator()));
    if (n > 0) {
      text = std::regex_replace(text, re, format);
    }
    return n;
  });
}

std::size_t set_wrong_penalty(QuestionBank& bank, double fraction)
{
  if (!std::isfinite(fraction) || fraction < -100.0 || fraction > 0.0) {
    throw ValidationError("penalty " + format_number(fraction) + " is outside [-100, 0]");
  }
  const double value = round_to_5_decimals(fraction);
  BankContent content = bank.snapshot();
  std::size_t touched = 0;
  for (auto& question : content.questions) {
    auto* set = std::get_if<ChoiceSet>(&question.payload);
    if (set == nullptr) {
      continue;
    }
    bool changed = false;
    for (auto& choice : set->choices) {
      if (choice.fraction != kCorrectFraction && choice.fraction != value) {
        choice.fraction = value;
        changed = true;
      }
    }
    touched += changed ? 1 : 0;
  }
  if (touched > 0) {
    bank.replace_content(std::move(content));
  }
  bank.set_wrong_fraction_rule([value](std::size_t) { return value; });
  return touched;
}

} // namespace qbank
