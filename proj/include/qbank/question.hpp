#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qbank {

enum class QuestionKind { short_answer, numerical, multiple_choice, matching };

// Type attribute value used by the XML dialect ("shortanswer", ...).
std::string_view xml_type_name(QuestionKind kind);
std::string_view kind_label(QuestionKind kind);

inline constexpr double kCorrectFraction = 100.0;

// One multiple-choice alternative. Fraction is a percentage in [-100, 100].
struct Choice
{
  std::string text;
  double fraction = 0.0;

  bool operator==(const Choice&) const = default;
};

struct ChoiceSet
{
  std::vector<Choice> choices;
  bool single_answer = true;

  bool operator==(const ChoiceSet&) const = default;
};

struct NumericalAnswerSet
{
  std::vector<double> answers;
  double tolerance = 0.01; // absolute

  bool operator==(const NumericalAnswerSet&) const = default;
};

struct ShortAnswerSet
{
  std::vector<std::string> answers;

  bool operator==(const ShortAnswerSet&) const = default;
};

struct MatchPair
{
  std::string prompt;
  std::string match;

  bool operator==(const MatchPair&) const = default;
};

struct MatchPairList
{
  std::vector<MatchPair> pairs;

  bool operator==(const MatchPairList&) const = default;
};

// Variant order follows QuestionKind.
using Payload = std::variant<ShortAnswerSet, NumericalAnswerSet, ChoiceSet, MatchPairList>;

struct Question
{
  std::string name;
  std::string stem;
  std::string category; // slash-separated, empty = LMS default
  Payload payload;

  QuestionKind kind() const noexcept { return static_cast<QuestionKind>(payload.index()); }

  bool operator==(const Question&) const = default;
};

// Throws ValidationError naming the violated invariant.
void validate(const Question& question);
void validate(const ChoiceSet& set);
void validate(const NumericalAnswerSet& set);
void validate(const ShortAnswerSet& set);
void validate(const MatchPairList& set);

// Index of the first choice with fraction +100, or choices.size() if none.
std::size_t correct_index(const ChoiceSet& set);

// Rejects empty segments ("A//B", "/A", "A/"); whitespace-only segments
// count as empty. The empty path itself is valid.
void validate_category(std::string_view path);

// Calls `fn(std::string&)` on every free-text field of a question: name,
// stem, choice texts, short answers, match prompts and matches.
template <typename Fn>
void for_each_text(Question& question, Fn&& fn)
{
  fn(question.name);
  fn(question.stem);
  std::visit(
    [&fn](auto& payload) {
      using T = std::decay_t<decltype(payload)>;
      if constexpr (std::is_same_v<T, ChoiceSet>) {
        for (auto& choice : payload.choices) {
          fn(choice.text);
        }
      } else if constexpr (std::is_same_v<T, ShortAnswerSet>) {
        for (auto& answer : payload.answers) {
          fn(answer);
        }
      } else if constexpr (std::is_same_v<T, MatchPairList>) {
        for (auto& pair : payload.pairs) {
          fn(pair.prompt);
          fn(pair.match);
        }
      }
    },
    question.payload);
}

} // namespace qbank
