#pragma once

#include "qbank/question.hpp"
#include "qbank/rng.hpp"
#include "qbank/text.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbank {

// Environment variables consulted when a bank is created from a script.
// `qbank build` sets them to inject --seed and --out.
inline constexpr const char* kSeedEnv = "QBANK_SEED";
inline constexpr const char* kOutputEnv = "QBANK_OUT";

struct Warning
{
  std::string message;
};

using WarningSink = std::function<void(const Warning&)>;

// Writes "WARN: <message>" lines to standard error.
void stderr_warning_sink(const Warning& warning);

// A setCategory call, recorded at the question index it precedes.
struct CategoryMark
{
  std::size_t position = 0;
  std::string path;

  bool operator==(const CategoryMark&) const = default;
};

// The serializable part of a bank. Category marks are sorted by position;
// several marks may share a position.
struct BankContent
{
  std::vector<CategoryMark> categories;
  std::vector<Question> questions;

  bool operator==(const BankContent&) const = default;
};

// Maps a choice count k to the grade fraction of each wrong choice.
using WrongFractionRule = std::function<double(std::size_t)>;

// -100/(k-1) rounded to five decimals: -100, -50, -33.33333, -25, ...
double default_wrong_fraction(std::size_t choice_count);

enum class EnvOverrides { apply, ignore };

// Ordered, categorized collection of questions that is written to one XML
// file on close(). Single writer: mutations must be externally serialized.
// Use snapshot() to hand an immutable copy to concurrent readers.
class QuestionBank
{
public:
  // The output path is only checked when the bank is closed. With
  // EnvOverrides::apply, QBANK_SEED replaces `seed` and QBANK_OUT replaces
  // `output_path`.
  explicit QuestionBank(std::filesystem::path output_path,
                        std::optional<std::uint64_t> seed = std::nullopt,
                        EnvOverrides env = EnvOverrides::apply);

  QuestionBank(const QuestionBank&) = delete;
  QuestionBank& operator=(const QuestionBank&) = delete;
  QuestionBank(QuestionBank&&) = default;
  QuestionBank& operator=(QuestionBank&&) = default;

  const std::filesystem::path& output_path() const noexcept { return m_output_path; }
  void set_output_path(std::filesystem::path path) { m_output_path = std::move(path); }

  // Questions added after this call carry `path`. Throws ValidationError on
  // empty segments.
  void set_category(std::string_view path);
  const std::string& category() const noexcept { return m_category; }

  void add_short_answer(std::string name, std::string question, std::vector<std::string> answers);

  template <Renderable T>
  void add_short_answer(std::string name, std::string question, const std::vector<T>& answers)
  {
    add_short_answer(std::move(name), std::move(question), to_texts(answers));
  }

  template <Renderable T>
  void add_short_answer(std::string name, std::string question, const T& answer)
  {
    add_short_answer(std::move(name), std::move(question), std::vector<std::string>{to_text(answer)});
  }

  void add_numerical(std::string name, std::string question, std::vector<double> answers,
                     double tolerance = 0.01);

  void add_numerical(std::string name, std::string question, double answer, double tolerance = 0.01)
  {
    add_numerical(std::move(name), std::move(question), std::vector<double>{answer}, tolerance);
  }

  // The first choice is the correct one; the others get wrong_fraction(k).
  // Returns false, with a warning and no question added, when two choices
  // render to the same text.
  bool add_multiple_choice(std::string name, std::string question, std::vector<std::string> choices);

  template <Renderable T>
  bool add_multiple_choice(std::string name, std::string question, const std::vector<T>& choices)
  {
    return add_multiple_choice(std::move(name), std::move(question), to_texts(choices));
  }

  void add_matching(std::string name, std::string question,
                    std::vector<std::pair<std::string, std::string>> pairs);

  // Appends a fully built question under the current category.
  void append(Question question);

  // Writes the bank to output_path() atomically and freezes it. A second
  // call only warns.
  void close();
  bool closed() const noexcept { return m_closed; }

  std::size_t size() const noexcept { return m_content.questions.size(); }
  bool empty() const noexcept { return m_content.questions.empty(); }
  const std::vector<Question>& questions() const noexcept { return m_content.questions; }
  const BankContent& content() const noexcept { return m_content; }
  BankContent snapshot() const { return m_content; }

  // Replaces everything after validating every question and category.
  // Leaves the bank untouched on failure.
  void replace_content(BankContent content);

  void set_wrong_fraction_rule(WrongFractionRule rule);
  double wrong_fraction(std::size_t choice_count) const;

  Rng& rng() noexcept { return m_rng; }

  void warn(std::string message);
  const std::vector<Warning>& warnings() const noexcept { return m_warnings; }
  void set_warning_sink(WarningSink sink) { m_sink = std::move(sink); }

private:
  void require_open() const;

  std::filesystem::path m_output_path;
  std::string m_category;
  BankContent m_content;
  WrongFractionRule m_wrong_rule;
  Rng m_rng;
  std::vector<Warning> m_warnings;
  WarningSink m_sink = stderr_warning_sink;
  bool m_closed = false;
};

// Builds a multiple-choice payload: first text correct, the rest at `wrong`.
ChoiceSet make_choice_set(const std::vector<std::string>& texts, double wrong);

} // namespace qbank
