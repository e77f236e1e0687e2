#include "qbank/bank.hpp"

#include "qbank/error.hpp"
#include "qbank/file_io.hpp"
#include "qbank/moodle_xml.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>

namespace qbank {

namespace {

std::optional<std::uint64_t> seed_from_env()
{
  const char* value = std::getenv(kSeedEnv);
  if (value == nullptr || *value == '\0') {
    return std::nullopt;
  }
  std::string_view text(value);
  std::uint64_t seed = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ValidationError(std::string(kSeedEnv) + " is not an unsigned integer: \"" + value + "\"");
  }
  return seed;
}

std::optional<std::uint64_t> pick_seed(std::optional<std::uint64_t> script_seed)
{
  auto injected = seed_from_env();
  return injected ? injected : script_seed;
}

void check_categories(const BankContent& content)
{
  for (const auto& mark : content.categories) {
    validate_category(mark.path);
    if (mark.position > content.questions.size()) {
      throw ValidationError("category mark past the end of the bank");
    }
  }
  if (!std::is_sorted(content.categories.begin(), content.categories.end(),
                      [](const CategoryMark& a, const CategoryMark& b) { return a.position < b.position; })) {
    throw ValidationError("category marks out of order");
  }
  auto mark = content.categories.begin();
  std::string current;
  for (std::size_t i = 0; i < content.questions.size(); ++i) {
    while (mark != content.categories.end() && mark->position == i) {
      current = mark->path;
      ++mark;
    }
    if (content.questions[i].category != current) {
      throw ValidationError("question " + std::to_string(i + 1) + " is in category \""
                            + content.questions[i].category + "\" but follows category mark \"" + current + "\"");
    }
  }
}

} // namespace

void stderr_warning_sink(const Warning& warning)
{
  std::cerr << "WARN: " << warning.message << '\n';
}

double default_wrong_fraction(std::size_t choice_count)
{
  if (choice_count < 2) {
    return -100.0;
  }
  return round_to_5_decimals(-100.0 / static_cast<double>(choice_count - 1));
}

ChoiceSet make_choice_set(const std::vector<std::string>& texts, double wrong)
{
  ChoiceSet set;
  set.choices.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    set.choices.push_back(Choice{texts[i], i == 0 ? kCorrectFraction : round_to_5_decimals(wrong)});
  }
  return set;
}

QuestionBank::QuestionBank(std::filesystem::path output_path, std::optional<std::uint64_t> seed, EnvOverrides env)
  : m_output_path(std::move(output_path)),
    m_wrong_rule(default_wrong_fraction),
    m_rng(env == EnvOverrides::apply ? pick_seed(seed) : seed)
{
  if (env == EnvOverrides::apply) {
    if (const char* out = std::getenv(kOutputEnv); out != nullptr && *out != '\0') {
      m_output_path = out;
    }
  }
}

void QuestionBank::require_open() const
{
  if (m_closed) {
    throw StateError("bank " + m_output_path.string() + " is closed");
  }
}

void QuestionBank::set_category(std::string_view path)
{
  require_open();
  validate_category(path);
  m_category = std::string(path);
  m_content.categories.push_back(CategoryMark{m_content.questions.size(), m_category});
}

void QuestionBank::append(Question question)
{
  require_open();
  for_each_text(question, [](std::string& text) { text = normalize_newlines(text); });
  question.category = m_category;
  validate(question);
  m_content.questions.push_back(std::move(question));
}

void QuestionBank::add_short_answer(std::string name, std::string question, std::vector<std::string> answers)
{
  append(Question{std::move(name), std::move(question), {}, ShortAnswerSet{std::move(answers)}});
}

void QuestionBank::add_numerical(std::string name, std::string question, std::vector<double> answers,
                                 double tolerance)
{
  append(Question{std::move(name), std::move(question), {}, NumericalAnswerSet{std::move(answers), tolerance}});
}

bool QuestionBank::add_multiple_choice(std::string name, std::string question, std::vector<std::string> choices)
{
  require_open();
  if (choices.size() < 2) {
    throw ValidationError("a multiple-choice question needs at least 2 choices");
  }
  for (std::size_t i = 0; i < choices.size(); ++i) {
    for (std::size_t j = i + 1; j < choices.size(); ++j) {
      if (same_text(choices[i], choices[j])) {
        warn("duplicated choice \"" + std::string(trim(choices[i])) + "\" in \"" + question
             + "\"; question not added");
        return false;
      }
    }
  }
  ChoiceSet set = make_choice_set(choices, wrong_fraction(choices.size()));
  append(Question{std::move(name), std::move(question), {}, std::move(set)});
  return true;
}

void QuestionBank::add_matching(std::string name, std::string question,
                                std::vector<std::pair<std::string, std::string>> pairs)
{
  MatchPairList list;
  list.pairs.reserve(pairs.size());
  for (auto& [prompt, match] : pairs) {
    list.pairs.push_back(MatchPair{std::move(prompt), std::move(match)});
  }
  append(Question{std::move(name), std::move(question), {}, std::move(list)});
}

void QuestionBank::replace_content(BankContent content)
{
  require_open();
  for (auto& question : content.questions) {
    for_each_text(question, [](std::string& text) { text = normalize_newlines(text); });
    validate(question);
  }
  check_categories(content);
  m_content = std::move(content);
  m_category = m_content.categories.empty() ? std::string() : m_content.categories.back().path;
}

void QuestionBank::set_wrong_fraction_rule(WrongFractionRule rule)
{
  m_wrong_rule = rule ? std::move(rule) : WrongFractionRule(default_wrong_fraction);
}

double QuestionBank::wrong_fraction(std::size_t choice_count) const
{
  return round_to_5_decimals(m_wrong_rule(choice_count));
}

void QuestionBank::warn(std::string message)
{
  m_warnings.push_back(Warning{std::move(message)});
  if (m_sink) {
    m_sink(m_warnings.back());
  }
}

void QuestionBank::close()
{
  if (m_closed) {
    warn("bank " + m_output_path.string() + " is already closed; nothing written");
    return;
  }
  if (m_output_path.empty()) {
    throw IoError("", "bank has no output path");
  }
  if (empty()) {
    warn("bank " + m_output_path.string() + " has no questions; writing an empty quiz");
  }
  write_file_atomic(m_output_path, serialize_bank(m_content));
  m_closed = true;
}

} // namespace qbank
