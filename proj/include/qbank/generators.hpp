#pragma once

#include "qbank/bank.hpp"
#include "qbank/rng.hpp"
#include "qbank/text.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbank {

// Every generated question shows one correct answer and this many distractors.
inline constexpr std::size_t kDistractorsPerQuestion = 3;

// Random draws per question before falling back to an exact pick among the
// unused distractor subsets.
inline constexpr int kResampleLimit = 100;

// Marker for a blanked token in plain text.
inline constexpr std::string_view kBlankText = "________";

// Marker for a blanked token inside HTML stems.
std::string_view blank_html();

// n choose k. Throws std::overflow_error if the result does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Questions with pairwise different correct answers: c. Throws
// ValidationError for c = 0.
std::uint64_t count_unique(std::uint64_t correct_count);

// Questions differing in at least one choice: c * C(d, 3). Throws
// ValidationError for c = 0 or d < 3.
std::uint64_t count_distinct(std::uint64_t correct_count, std::uint64_t distractor_count);

// Draws k items uniformly over the k-subsets of the valid pool, in random
// order. Items are compared by trimmed text; duplicates collapse to their
// first occurrence and anything matching `exclude` is dropped. Throws
// SamplingError when fewer than k valid items remain.
std::vector<std::string> sample_distractors(const std::vector<std::string>& pool, std::size_t k,
                                            const std::vector<std::string>& exclude, Rng& rng);

// Correct items (fulfilling the property) and distractors (not fulfilling it).
struct ListPool
{
  std::vector<std::string> correct;
  std::vector<std::string> distractors;

  // Throws ValidationError if correct is empty, fewer than 3 distinct
  // distractors exist, or an item appears in both lists.
  void validate() const;
};

// (key, answer) pairs plus distractors that answer no key.
struct PairPool
{
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> extra_distractors;

  // Nominal per-key distractor count d = (c - 1) + a.
  std::size_t nominal_distractor_count() const noexcept
  {
    return pairs.empty() ? extra_distractors.size() : pairs.size() - 1 + extra_distractors.size();
  }
};

// Text with tokens to blank out, plus extra distractor tokens.
struct TokenPool
{
  std::string source_text;
  std::vector<std::string> tokens;
  std::vector<std::string> extra_distractors;

  // Throws ValidationError naming the first token absent from the text or
  // any token whose distractor pool has fewer than 3 entries.
  void validate() const;
};

// Adds questions whose stem is `question` and whose choices are one correct
// item plus three distractors. num_questions = -1 adds c unique questions;
// larger requests cycle through the correct items again with distractor
// subsets not used before. Returns the number of questions added.
std::size_t add_multiple_choice_from_lists(QuestionBank& bank, std::string_view title,
                                           std::string_view question, const ListPool& pool,
                                           long num_questions = -1);

template <Renderable C, Renderable D>
std::size_t add_multiple_choice_from_lists(QuestionBank& bank, std::string_view title,
                                           std::string_view question, const std::vector<C>& correct,
                                           const std::vector<D>& distractors, long num_questions = -1)
{
  return add_multiple_choice_from_lists(bank, title, question, ListPool{to_texts(correct), to_texts(distractors)},
                                        num_questions);
}

// Substitutes each key at the single "%s" in `pattern`. Distractors come
// from the other answers and the extra list, never string-equal to the
// chosen answer.
std::size_t add_multiple_choice_from_pairs(QuestionBank& bank, std::string_view title,
                                           std::string_view pattern, const PairPool& pool,
                                           long num_questions = -1);

template <Renderable K, Renderable A, Renderable D = std::string>
std::size_t add_multiple_choice_from_pairs(QuestionBank& bank, std::string_view title,
                                           std::string_view pattern,
                                           const std::vector<std::pair<K, A>>& pairs,
                                           const std::vector<D>& extra_distractors = {},
                                           long num_questions = -1)
{
  PairPool pool;
  pool.pairs.reserve(pairs.size());
  for (const auto& [key, answer] : pairs) {
    pool.pairs.emplace_back(to_text(key), to_text(answer));
  }
  pool.extra_distractors = to_texts(extra_distractors);
  return add_multiple_choice_from_pairs(bank, title, pattern, pool, num_questions);
}

// Fill-in-the-blank questions: every occurrence of the chosen token in the
// (HTML-escaped) source text is replaced by blank_html(), and the result is
// substituted at "%s" in `pattern`.
std::size_t add_complete_code(QuestionBank& bank, std::string_view title, std::string_view pattern,
                              const TokenPool& pool, long num_questions = -1);

inline std::size_t add_complete_code(QuestionBank& bank, std::string_view title, std::string_view pattern,
                                     std::string_view source_text, std::vector<std::string> tokens,
                                     std::vector<std::string> extra_distractors = {},
                                     long num_questions = -1)
{
  return add_complete_code(bank, title, pattern,
                           TokenPool{std::string(source_text), std::move(tokens), std::move(extra_distractors)},
                           num_questions);
}

} // namespace qbank
