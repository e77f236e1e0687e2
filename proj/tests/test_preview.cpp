#include "support.hpp"

#include "qbank/file_io.hpp"
#include "qbank/preview.hpp"

#include <doctest.h>

#include <regex>

using namespace qbank;

namespace {

std::size_t count(const std::string& html, const std::string& needle)
{
  return count_occurrences(html, needle);
}

} // namespace

TEST_CASE("one block per question with names shown")
{
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("Capital", "Capital of France?", std::string("Paris"));
  bank.add_numerical("", "Solve", std::vector<double>{3, -5});
  bank.add_multiple_choice("Pick", "Pick one", std::vector<std::string>{"right", "w1", "w2"});
  bank.add_matching("", "Match", {{"a", "1"}, {"b", "2"}});
  const std::string html = render_preview_html(bank.content());
  CHECK(count(html, "<div class=\"que ") == 4);
  CHECK(html.find("Capital") != std::string::npos);
  CHECK(html.find("Q2") != std::string::npos);
  CHECK(html.find("<span class=\"accepted\">3 | -5</span>") != std::string::npos);
  CHECK(html.find("<span class=\"accepted\">Paris</span>") != std::string::npos);
  CHECK(html.find(kMathJaxUrl) != std::string::npos);
}

TEST_CASE("correct choice comes first")
{
  auto bank = testing::quiet_bank(1);
  bank.add_multiple_choice("", "Pick", std::vector<std::string>{"right", "w1", "w2"});
  auto content = bank.snapshot();
  auto& choices = std::get<ChoiceSet>(content.questions[0].payload).choices;
  std::swap(choices[0], choices[2]);
  const std::string html = render_preview_html(content);
  auto right = html.find("right");
  CHECK(right != std::string::npos);
  CHECK(right < html.find("w1"));
  CHECK(right < html.find("w2"));
}

TEST_CASE("answers sit next to their inputs")
{
  auto bank = testing::quiet_bank(1);
  bank.add_numerical("", "N", 4.0);
  const std::string html = render_preview_html(bank.content());
  std::regex adjacent(R"(<input[^>]*disabled[^>]*>\s*<span class="accepted">4</span>)");
  CHECK(std::regex_search(html, adjacent));
}

TEST_CASE("empty bank and categories")
{
  auto empty = testing::quiet_bank(1);
  CHECK(render_preview_html(empty.content()).find("No questions in this bank.") != std::string::npos);

  auto bank = testing::quiet_bank(1);
  bank.set_category("Unit 1");
  bank.add_short_answer("", "Q", std::string("a"));
  CHECK(render_preview_html(bank.content()).find("<h2 class=\"category\">Unit 1</h2>") != std::string::npos);
}

TEST_CASE("names and text are escaped, stems are raw HTML")
{
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("<i>n</i>", "<b>bold</b>", std::string("a"));
  const std::string html = render_preview_html(bank.content());
  CHECK(html.find("&lt;i&gt;n&lt;/i&gt;") != std::string::npos);
  CHECK(html.find("<b>bold</b>") != std::string::npos);
}

TEST_CASE("math script can be inlined for offline use")
{
  testing::ScratchDir dir;
  write_file_atomic(dir / "mj.js", "window.inlinedMath = 1;");
  PreviewOptions options;
  options.inline_math_script = dir / "mj.js";
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("", "Q", std::string("a"));
  const std::string html = render_preview_html(bank.content(), options);
  CHECK(html.find("window.inlinedMath = 1;") != std::string::npos);
  CHECK(html.find(kMathJaxUrl) == std::string::npos);
}

TEST_CASE("preview writes a temp file without a browser")
{
  ::setenv(kNoBrowserEnv, "1", 1);
  auto bank = testing::quiet_bank(1);
  bank.add_short_answer("", "Q", std::string("a"));
  auto path = preview(bank);
  CHECK(std::filesystem::exists(path));
  CHECK(path.filename().string().rfind("qbank-preview-", 0) == 0);
  CHECK(read_file(path).find("<div class=\"que ") != std::string::npos);
  std::filesystem::remove(path);
}
