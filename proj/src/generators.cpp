#include "qbank/generators.hpp"

#include "qbank/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qbank {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k)
{
  try {
    return binomial(n, k);
  } catch (const std::overflow_error&) {
    return kSaturated;
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
  return a > kSaturated - b ? kSaturated : a + b;
}

// Keeps the first occurrence of each trimmed text, dropping anything that
// matches an entry of `exclude`.
std::vector<std::string> distinct_texts(const std::vector<std::string>& items,
                                        const std::vector<std::string>& exclude = {})
{
  std::set<std::string_view> seen;
  for (const auto& e : exclude) {
    seen.insert(trim(e));
  }
  std::vector<std::string> out;
  for (const auto& item : items) {
    if (seen.insert(trim(item)).second) {
      out.push_back(item);
    }
  }
  return out;
}

// Colex rank of a sorted index combination.
std::uint64_t rank_combination(const std::vector<std::size_t>& sorted)
{
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rank += binomial(sorted[i], i + 1);
  }
  return rank;
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t k, std::size_t n)
{
  std::vector<std::size_t> out(k);
  std::size_t upper = n;
  for (std::size_t i = k; i > 0; --i) {
    std::size_t x = i - 1;
    while (x + 1 < upper && binomial(x + 1, i) <= rank) {
      ++x;
    }
    out[i - 1] = x;
    rank -= binomial(x, i);
    upper = x;
  }
  return out;
}

// One way of asking: a stem, its correct choice, and the distractors that
// may accompany it (already distinct and free of the correct text).
struct Candidate
{
  std::string stem;
  std::string correct;
  std::vector<std::string> pool;
};

std::string question_name(std::string_view title, std::size_t ordinal)
{
  if (title.empty()) {
    return {};
  }
  return std::string(title) + " " + std::to_string(ordinal);
}

std::size_t resolve_count(long num_questions, std::size_t default_count)
{
  if (num_questions < -1) {
    throw ValidationError("numQuestions must be -1 or a non-negative count, got " + std::to_string(num_questions));
  }
  return num_questions == -1 ? default_count : static_cast<std::size_t>(num_questions);
}

// Shuffles the candidates once and consumes them round-robin, so the first
// len(candidates) questions never repeat a candidate. Each candidate's
// distractor subsets are tracked by rank; a question is only emitted with a
// subset that candidate has not used yet.
std::size_t generate(QuestionBank& bank, std::string_view title, const std::vector<Candidate>& candidates,
                     long num_questions)
{
  const std::size_t target = resolve_count(num_questions, candidates.size());
  constexpr std::size_t k = kDistractorsPerQuestion;

  std::vector<std::uint64_t> subsets(candidates.size());
  std::uint64_t capacity = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    subsets[i] = saturating_binomial(candidates[i].pool.size(), k);
    capacity = saturating_add(capacity, subsets[i]);
  }
  if (target > capacity) {
    throw CapacityError(target, static_cast<std::size_t>(std::min<std::uint64_t>(capacity, kSaturated)));
  }

  Rng& rng = bank.rng();
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));

  std::vector<std::set<std::uint64_t>> used(candidates.size());
  std::size_t cursor = 0;
  std::size_t added = 0;
  for (std::size_t q = 0; q < target; ++q) {
    std::size_t index = order[cursor % order.size()];
    while (used[index].size() >= subsets[index]) {
      index = order[++cursor % order.size()];
    }
    ++cursor;
    const Candidate& candidate = candidates[index];

    std::map<std::string_view, std::size_t> position;
    for (std::size_t i = 0; i < candidate.pool.size(); ++i) {
      position.emplace(trim(candidate.pool[i]), i);
    }

    std::vector<std::string> distractors;
    for (int attempt = 0; attempt < kResampleLimit && distractors.empty(); ++attempt) {
      auto draw = sample_distractors(candidate.pool, k, {candidate.correct}, rng);
      std::vector<std::size_t> indices;
      for (const auto& text : draw) {
        indices.push_back(position.at(trim(text)));
      }
      std::sort(indices.begin(), indices.end());
      if (used[index].insert(rank_combination(indices)).second) {
        distractors = std::move(draw);
      }
    }
    if (distractors.empty()) {
      // Pick uniformly among the subsets this candidate has not shown yet.
      std::uint64_t rank = rng.below(subsets[index] - used[index].size());
      for (std::uint64_t taken : used[index]) {
        if (taken > rank) {
          break;
        }
        ++rank;
      }
      used[index].insert(rank);
      for (std::size_t i : unrank_combination(rank, k, candidate.pool.size())) {
        distractors.push_back(candidate.pool[i]);
      }
      rng.shuffle(std::span<std::string>(distractors));
    }

    std::vector<std::string> choices{candidate.correct};
    choices.insert(choices.end(), distractors.begin(), distractors.end());
    if (bank.add_multiple_choice(question_name(title, added + 1), candidate.stem, std::move(choices))) {
      ++added;
    }
  }
  return added;
}

void require_single_placeholder(std::string_view pattern)
{
  std::size_t n = count_occurrences(pattern, "%s");
  if (n != 1) {
    throw ValidationError("question pattern must contain exactly one \"%s\", found " + std::to_string(n) + ": \""
                          + std::string(pattern) + "\"");
  }
}

std::string substitute(std::string_view pattern, std::string_view value)
{
  std::string out(pattern);
  std::size_t pos = out.find("%s");
  out.replace(pos, 2, value);
  return out;
}

std::string blank_out(std::string_view source, std::string_view token)
{
  std::string out;
  std::size_t start = 0;
  for (std::size_t pos = source.find(token); pos != std::string_view::npos; pos = source.find(token, start)) {
    out += html_escape(source.substr(start, pos - start));
    out += blank_html();
    start = pos + token.size();
  }
  out += html_escape(source.substr(start));
  return out;
}

template <typename T, typename Key>
std::vector<T> drop_repeats(QuestionBank& bank, const std::vector<T>& items, Key key, std::string_view what)
{
  std::vector<T> out;
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (seen.insert(key(item)).second) {
      out.push_back(item);
    } else {
      bank.warn("repeated " + std::string(what) + " \"" + key(item) + "\" ignored");
    }
  }
  return out;
}

} // namespace

std::string_view blank_html()
{
  return "<span class=\"qbank-blank\" style=\"text-decoration: underline;\">"
         "&nbsp;&nbsp;&nbsp;&nbsp;&nbsp;&nbsp;&nbsp;&nbsp;</span>";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; split by gcd to delay
    // overflow.
    std::uint64_t numerator = n - k + i;
    std::uint64_t g = std::gcd(result, i);
    std::uint64_t r = result / g;
    std::uint64_t den = i / g;
    numerator /= den; // den divides numerator since result*numerator is divisible by i
    if (numerator != 0 && r > kSaturated / numerator) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    result = r * numerator;
  }
  return result;
}

std::uint64_t count_unique(std::uint64_t correct_count)
{
  if (correct_count == 0) {
    throw ValidationError("count_unique needs at least one correct answer");
  }
  return correct_count;
}

std::uint64_t count_distinct(std::uint64_t correct_count, std::uint64_t distractor_count)
{
  if (correct_count == 0) {
    throw ValidationError("count_distinct needs at least one correct answer");
  }
  if (distractor_count < kDistractorsPerQuestion) {
    throw ValidationError("count_distinct needs at least 3 distractors, got " + std::to_string(distractor_count));
  }
  std::uint64_t subsets = binomial(distractor_count, kDistractorsPerQuestion);
  if (subsets > kSaturated / correct_count) {
    throw std::overflow_error("count_distinct overflows");
  }
  return correct_count * subsets;
}

std::vector<std::string> sample_distractors(const std::vector<std::string>& pool, std::size_t k,
                                            const std::vector<std::string>& exclude, Rng& rng)
{
  std::vector<std::string> valid = distinct_texts(pool, exclude);
  if (valid.size() < k) {
    throw SamplingError("need " + std::to_string(k) + " distinct distractors but only " + std::to_string(valid.size())
                        + " are available");
  }
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset in
  // uniform order.
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(valid.size() - i));
    std::swap(valid[i], valid[j]);
  }
  valid.resize(k);
  return valid;
}

void ListPool::validate() const
{
  if (correct.empty()) {
    throw ValidationError("the correct-answer list is empty");
  }
  auto d = distinct_texts(distractors);
  if (d.size() < kDistractorsPerQuestion) {
    throw ValidationError("need at least 3 distinct distractors, got " + std::to_string(d.size()));
  }
  std::set<std::string_view> wrong;
  for (const auto& item : d) {
    wrong.insert(trim(item));
  }
  for (const auto& item : correct) {
    if (wrong.contains(trim(item))) {
      throw ValidationError("\"" + std::string(trim(item)) + "\" is both a correct answer and a distractor");
    }
  }
}

void TokenPool::validate() const
{
  if (tokens.empty()) {
    throw ValidationError("the token list is empty");
  }
  for (const auto& token : tokens) {
    if (token.empty()) {
      throw ValidationError("tokens must not be empty");
    }
    if (source_text.find(token) == std::string::npos) {
      throw ValidationError("token \"" + token + "\" does not occur in the source text");
    }
  }
  std::vector<std::string> all = tokens;
  all.insert(all.end(), extra_distractors.begin(), extra_distractors.end());
  for (const auto& token : tokens) {
    auto pool = distinct_texts(all, {token});
    if (pool.size() < kDistractorsPerQuestion) {
      throw ValidationError("token \"" + token + "\" has only " + std::to_string(pool.size())
                            + " distractors; at least 3 are needed");
    }
  }
}

std::size_t add_multiple_choice_from_lists(QuestionBank& bank, std::string_view title, std::string_view question,
                                           const ListPool& pool, long num_questions)
{
  pool.validate();
  auto correct = drop_repeats(bank, pool.correct, [](const std::string& s) { return std::string(trim(s)); },
                              "correct answer");
  auto distractors = distinct_texts(pool.distractors);

  const std::size_t target = resolve_count(num_questions, correct.size());
  const std::uint64_t capacity = count_distinct(correct.size(), distractors.size());
  if (target > capacity) {
    throw CapacityError(target, static_cast<std::size_t>(capacity));
  }

  std::vector<Candidate> candidates;
  for (auto& answer : correct) {
    candidates.push_back(Candidate{std::string(question), answer, distractors});
  }
  return generate(bank, title, candidates, static_cast<long>(target));
}

std::size_t add_multiple_choice_from_pairs(QuestionBank& bank, std::string_view title, std::string_view pattern,
                                           const PairPool& pool, long num_questions)
{
  require_single_placeholder(pattern);
  if (pool.pairs.empty()) {
    throw ValidationError("the (key, answer) list is empty");
  }
  auto pairs = drop_repeats(
    bank, pool.pairs,
    [](const std::pair<std::string, std::string>& p) {
      return "(" + std::string(trim(p.first)) + ", " + std::string(trim(p.second)) + ")";
    },
    "pair");

  std::vector<std::string> everything;
  for (const auto& [key, answer] : pairs) {
    everything.push_back(answer);
  }
  everything.insert(everything.end(), pool.extra_distractors.begin(), pool.extra_distractors.end());

  std::vector<Candidate> candidates;
  for (const auto& [key, answer] : pairs) {
    // Drops every string-equal answer, so non-injective pairs never offer
    // the correct answer twice.
    auto distractors = distinct_texts(everything, {answer});
    if (distractors.size() < kDistractorsPerQuestion) {
      bank.warn("key \"" + key + "\" skipped: only " + std::to_string(distractors.size())
                + " distractors differ from its answer \"" + answer + "\"");
      continue;
    }
    candidates.push_back(Candidate{substitute(pattern, key), answer, std::move(distractors)});
  }
  if (candidates.empty()) {
    throw ValidationError("no key has at least 3 usable distractors");
  }
  return generate(bank, title, candidates, num_questions);
}

std::size_t add_complete_code(QuestionBank& bank, std::string_view title, std::string_view pattern,
                              const TokenPool& pool, long num_questions)
{
  require_single_placeholder(pattern);
  pool.validate();
  auto tokens = drop_repeats(bank, pool.tokens, [](const std::string& s) { return std::string(trim(s)); }, "token");

  std::vector<std::string> everything = tokens;
  everything.insert(everything.end(), pool.extra_distractors.begin(), pool.extra_distractors.end());

  std::vector<Candidate> candidates;
  for (const auto& token : tokens) {
    std::vector<std::string> distractors;
    for (const auto& text : distinct_texts(everything, {token})) {
      distractors.push_back(html_escape(text));
    }
    candidates.push_back(
      Candidate{substitute(pattern, blank_out(pool.source_text, token)), html_escape(token), std::move(distractors)});
  }
  return generate(bank, title, candidates, num_questions);
}

} // namespace qbank
