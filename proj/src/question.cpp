#include "qbank/question.hpp"

#include "qbank/error.hpp"
#include "qbank/text.hpp"

#include <cmath>
#include <set>

namespace qbank {

std::string_view xml_type_name(QuestionKind kind)
{
  switch (kind) {
  case QuestionKind::short_answer: return "shortanswer";
  case QuestionKind::numerical: return "numerical";
  case QuestionKind::multiple_choice: return "multichoice";
  case QuestionKind::matching: return "matching";
  }
  return "unknown";
}

std::string_view kind_label(QuestionKind kind)
{
  switch (kind) {
  case QuestionKind::short_answer: return "short answer";
  case QuestionKind::numerical: return "numerical";
  case QuestionKind::multiple_choice: return "multiple choice";
  case QuestionKind::matching: return "matching";
  }
  return "unknown";
}

std::size_t correct_index(const ChoiceSet& set)
{
  for (std::size_t i = 0; i < set.choices.size(); ++i) {
    if (set.choices[i].fraction == kCorrectFraction) {
      return i;
    }
  }
  return set.choices.size();
}

void validate(const ChoiceSet& set)
{
  if (!set.single_answer) {
    throw ValidationError("multiple-answer questions are not supported");
  }
  if (set.choices.size() < 2) {
    throw ValidationError("a multiple-choice question needs at least 2 choices");
  }
  std::size_t correct = 0;
  std::set<std::string_view> seen;
  for (const auto& choice : set.choices) {
    if (!std::isfinite(choice.fraction) || choice.fraction < -100.0 || choice.fraction > 100.0) {
      throw ValidationError("choice fraction " + format_fraction(choice.fraction) + " is outside [-100, 100]");
    }
    if (choice.fraction == kCorrectFraction) {
      ++correct;
    }
    if (!seen.insert(trim(choice.text)).second) {
      throw ValidationError("duplicated choice \"" + std::string(trim(choice.text)) + "\"");
    }
  }
  if (correct != 1) {
    throw ValidationError("expected exactly one choice graded 100, found " + std::to_string(correct));
  }
}

void validate(const NumericalAnswerSet& set)
{
  if (set.answers.empty()) {
    throw ValidationError("a numerical question needs at least one answer");
  }
  for (double answer : set.answers) {
    if (!std::isfinite(answer)) {
      throw ValidationError("numerical answers must be finite");
    }
  }
  if (!std::isfinite(set.tolerance) || set.tolerance < 0.0) {
    throw ValidationError("tolerance must be a finite value >= 0, got " + format_number(set.tolerance));
  }
}

void validate(const ShortAnswerSet& set)
{
  if (set.answers.empty()) {
    throw ValidationError("a short-answer question needs at least one answer");
  }
  std::set<std::string_view> seen;
  for (const auto& answer : set.answers) {
    if (trim(answer).empty()) {
      throw ValidationError("short answers must not be empty");
    }
    if (!seen.insert(trim(answer)).second) {
      throw ValidationError("duplicated short answer \"" + std::string(trim(answer)) + "\"");
    }
  }
}

void validate(const MatchPairList& set)
{
  if (set.pairs.size() < 2) {
    throw ValidationError("a matching question needs at least 2 pairs");
  }
  std::set<std::string_view> seen;
  for (const auto& pair : set.pairs) {
    if (trim(pair.prompt).empty() || trim(pair.match).empty()) {
      throw ValidationError("matching prompts and matches must not be empty");
    }
    if (!seen.insert(trim(pair.prompt)).second) {
      throw ValidationError("duplicated matching prompt \"" + std::string(trim(pair.prompt)) + "\"");
    }
  }
}

void validate(const Question& question)
{
  if (trim(question.stem).empty()) {
    throw ValidationError("question text must not be empty");
  }
  validate_category(question.category);
  std::visit([](const auto& payload) { validate(payload); }, question.payload);
}

void validate_category(std::string_view path)
{
  if (path.empty()) {
    return;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t slash = path.find('/', start);
    std::string_view segment = path.substr(start, slash == std::string_view::npos ? path.npos : slash - start);
    if (trim(segment).empty()) {
      throw ValidationError("category \"" + std::string(path) + "\" has an empty segment");
    }
    if (slash == std::string_view::npos) {
      break;
    }
    start = slash + 1;
  }
}

} // namespace qbank
