#pragma once

// Shared helpers for the unit and acceptance suites: a quiet warning sink,
// scratch directories, random bank fixtures and brute-force oracles that do
// not touch the generator code paths.

#include "qbank/bank.hpp"
#include "qbank/media.hpp"
#include "qbank/question.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

namespace testing {

struct WarningLog
{
  std::vector<std::string> messages;

  qbank::WarningSink sink()
  {
    return [this](const qbank::Warning& w) { messages.push_back(w.message); };
  }
};

inline void silence(qbank::QuestionBank& bank)
{
  bank.set_warning_sink([](const qbank::Warning&) {});
}

inline qbank::QuestionBank quiet_bank(std::uint64_t seed, std::filesystem::path out = "unused.xml")
{
  qbank::QuestionBank bank(std::move(out), seed, qbank::EnvOverrides::ignore);
  silence(bank);
  return bank;
}

class ScratchDir
{
public:
  ScratchDir()
  {
    std::string pattern = (std::filesystem::temp_directory_path() / "qbank-test-XXXXXX").string();
    if (::mkdtemp(pattern.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    m_path = pattern;
  }
  ~ScratchDir()
  {
    std::error_code ec;
    std::filesystem::remove_all(m_path, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return m_path; }
  std::filesystem::path operator/(const std::string& name) const { return m_path / name; }

private:
  std::filesystem::path m_path;
};

// Smallest valid PNG: 1x1, 8-bit grayscale.
inline std::vector<std::uint8_t> tiny_png()
{
  return {0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D, 0x49, 0x48, 0x44, 0x52,
          0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x08, 0x00, 0x00, 0x00, 0x00, 0x3A, 0x7E, 0x9B,
          0x55, 0x00, 0x00, 0x00, 0x0A, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9C, 0x63, 0x60, 0x00, 0x00, 0x00,
          0x02, 0x00, 0x01, 0x48, 0xAF, 0xA4, 0x71, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4E, 0x44, 0xAE,
          0x42, 0x60, 0x82};
}

// ---------------------------------------------------------------------------
// Oracles

// A question reduced to what distinctness compares: its stem, the correct
// choice and the set of wrong choices.
struct QuestionShape
{
  std::string stem;
  std::string correct;
  std::set<std::string> wrong;

  auto operator<=>(const QuestionShape&) const = default;
};

inline QuestionShape shape_of(const qbank::Question& q)
{
  QuestionShape s{q.stem, {}, {}};
  for (const auto& c : std::get<qbank::ChoiceSet>(q.payload).choices) {
    if (c.fraction == 100.0) {
      s.correct = c.text;
    } else {
      s.wrong.insert(c.text);
    }
  }
  return s;
}

// Every (correct, 3-distractor subset) question by explicit nested loops.
inline std::set<QuestionShape> enumerate_list_questions(const std::string& stem, const std::vector<std::string>& correct,
                                                        const std::vector<std::string>& distractors)
{
  std::set<QuestionShape> space;
  const std::size_t d = distractors.size();
  for (const auto& answer : correct) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
          space.insert(QuestionShape{stem, answer, {distractors[i], distractors[j], distractors[k]}});
        }
      }
    }
  }
  return space;
}

inline std::vector<std::string> labels(const std::string& prefix, std::size_t n)
{
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random banks for round-trip properties

class BankFuzzer
{
public:
  explicit BankFuzzer(std::uint64_t seed) : m_rng(seed) {}

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(m_rng); }

  // Mix of HTML, LaTeX, CDATA terminators, entities, quotes and non-ASCII.
  std::string text()
  {
    static const std::vector<std::string> parts{
      "a",     "Flux",      " ",         "<b>bold</b>", "\\(x^2\\)", "$$\\int_0^1 f$$", "]]>", "&amp;", "&", "<",
      "\"q\"", "'s",        "\n",        "\t",          "é",         "数",              "∑",   "%s",    "]]", ">",
      "<p>",   "\\lambda",  "W/(sr*m^2)", "0.5",       "]",         "[CDATA[",         "<![CDATA[", "x"};
    std::string out = "t";
    std::size_t n = 1 + pick(6);
    for (std::size_t i = 0; i < n; ++i) {
      out += parts[pick(parts.size())];
    }
    return out;
  }

  double number()
  {
    static const std::vector<double> values{0.0, 3.0, -5.0, 0.01, 1e-7, 123456.789, -0.1, 2.5e20, 1.0 / 3.0};
    return values[pick(values.size())];
  }

  qbank::Question question()
  {
    qbank::Question q;
    q.name = pick(3) == 0 ? std::string() : text();
    q.stem = text();
    switch (pick(4)) {
    case 0: {
      qbank::ShortAnswerSet s;
      std::size_t n = 1 + pick(3);
      for (std::size_t i = 0; i < n; ++i) {
        s.answers.push_back("ans" + std::to_string(i) + text());
      }
      q.payload = s;
      break;
    }
    case 1: {
      qbank::NumericalAnswerSet s;
      std::size_t n = 1 + pick(3);
      for (std::size_t i = 0; i < n; ++i) {
        s.answers.push_back(number());
      }
      s.tolerance = std::abs(number());
      q.payload = s;
      break;
    }
    case 2: {
      std::size_t k = 2 + pick(4);
      std::vector<std::string> texts;
      for (std::size_t i = 0; i < k; ++i) {
        texts.push_back("c" + std::to_string(i) + text());
      }
      q.payload = qbank::make_choice_set(texts, qbank::default_wrong_fraction(k));
      break;
    }
    default: {
      qbank::MatchPairList m;
      std::size_t n = 2 + pick(3);
      for (std::size_t i = 0; i < n; ++i) {
        m.pairs.push_back({"p" + std::to_string(i) + text(), text()});
      }
      q.payload = m;
    }
    }
    return q;
  }

  std::string category()
  {
    static const std::vector<std::string> names{"Calculus", "Derivatives", "Unit 1", "Año", "A&B", "x<y"};
    std::string out = names[pick(names.size())];
    std::size_t depth = pick(3);
    for (std::size_t i = 0; i < depth; ++i) {
      out += "/" + names[pick(names.size())];
    }
    return out;
  }

  void fill(qbank::QuestionBank& bank, std::size_t questions)
  {
    for (std::size_t i = 0; i < questions; ++i) {
      if (pick(4) == 0) {
        bank.set_category(pick(5) == 0 ? std::string() : category());
      }
      bank.append(question());
    }
    if (pick(3) == 0) {
      bank.set_category(category());
    }
  }

private:
  std::mt19937_64 m_rng;
};

} // namespace testing
