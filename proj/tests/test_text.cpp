#include "qbank/rng.hpp"
#include "qbank/text.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <tuple>

using namespace qbank;

TEST_CASE("trim and same_text")
{
  CHECK(trim("  a b \n") == "a b");
  CHECK(trim("") == "");
  CHECK(same_text(" x", "x  "));
  CHECK_FALSE(same_text("x", "X"));
}

TEST_CASE("newline normalization")
{
  CHECK(normalize_newlines("a\r\nb\rc\n") == "a\nb\nc\n");
}

TEST_CASE("replace_all counts non-overlapping matches")
{
  std::string s = "aaaa";
  CHECK(replace_all(s, "aa", "b") == 2);
  CHECK(s == "bb");
  CHECK(count_occurrences("abcabc", "bc") == 2);
}

TEST_CASE("html_escape")
{
  CHECK(html_escape("<a href=\"x\">&</a>") == "&lt;a href=&quot;x&quot;&gt;&amp;&lt;/a&gt;");
}

TEST_CASE("number formatting")
{
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(-5.0) == "-5");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_fraction(-100.0 / 3.0) == "-33.33333");
  CHECK(format_fraction(-50.0) == "-50");
  CHECK(format_fraction(100.0) == "100");
  CHECK(round_to_5_decimals(-100.0 / 3.0) == doctest::Approx(-33.33333).epsilon(1e-12));
}

TEST_CASE("to_text renders scalars and tuples")
{
  CHECK(to_text(7) == "7");
  CHECK(to_text(2.5) == "2.5");
  CHECK(to_text(std::pair<int, std::string>{1, "a"}) == "(1, a)");
  CHECK(to_text(std::tuple<int, int, int>{1, 2, 3}) == "(1, 2, 3)");
  CHECK(to_texts(std::vector<int>{1, 2}) == std::vector<std::string>{"1", "2"});
}

TEST_CASE("rng is reproducible and below() is in range")
{
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
  }
  CHECK(a.seed() == 5);
}

TEST_CASE("rng values are pinned for cross-platform determinism")
{
  // mt19937_64 output is fixed by the standard; below() and shuffle are ours.
  Rng rng(42);
  std::vector<int> v(10);
  std::iota(v.begin(), v.end(), 0);
  rng.shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

  Rng again(42);
  std::vector<int> w(10);
  std::iota(w.begin(), w.end(), 0);
  again.shuffle(std::span<int>(w));
  CHECK(v == w);
}

TEST_CASE("shuffle is roughly uniform over permutations of 3")
{
  Rng rng(1);
  std::map<std::vector<int>, int> seen;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    std::vector<int> v{0, 1, 2};
    rng.shuffle(std::span<int>(v));
    ++seen[v];
  }
  CHECK(seen.size() == 6);
  for (const auto& [perm, n] : seen) {
    CHECK(static_cast<double>(n) / draws == doctest::Approx(1.0 / 6).epsilon(0.05));
  }
}
