#include "qbank/preview.hpp"

#include "qbank/error.hpp"
#include "qbank/file_io.hpp"
#include "qbank/text.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include <unistd.h>

namespace qbank {

namespace {

// Loosely follows the LMS question layout: numbered info column, tinted
// content box, correct choice highlighted.
constexpr std::string_view kStyle = R"css(
body { font-family: "Helvetica Neue", Helvetica, Arial, sans-serif; font-size: 15px; color: #1d2125; background: #f8f9fa; margin: 0 auto; max-width: 60em; padding: 1em; }
h1 { font-size: 1.6em; font-weight: 400; }
h2.category { font-size: 1.2em; font-weight: 400; border-bottom: 1px solid #dee2e6; margin-top: 2em; }
.que { display: flex; margin: 0 0 1.5em 0; }
.que .info { flex: 0 0 9em; margin-right: 1em; padding: 0.5em; background: #f8f9fa; border: 1px solid #cad0d7; border-radius: 2px; }
.que .info .qno { font-size: 1.4em; font-weight: bold; display: block; }
.que .info .qname { font-size: 0.9em; font-weight: bold; margin: 0.3em 0; word-break: break-word; }
.que .info .qtype { font-size: 0.8em; color: #6a737b; }
.que .content { flex: 1 1 auto; background: #e7f3f5; color: #001a1e; padding: 0.8em 1em; border-radius: 2px; }
.que .qtext { margin-bottom: 1em; }
.que .ablock .choice { padding: 0.2em 0.4em; margin: 0.1em 0; }
.que .ablock .choice.correct { background: #d4edda; }
.que .ablock .fraction { display: inline-block; min-width: 4em; color: #6a737b; font-size: 0.85em; }
.que .accepted { margin-left: 0.5em; font-weight: bold; color: #0f6cbf; }
.que .tolerance { margin-left: 0.3em; color: #6a737b; }
.que table.matching td { padding: 0.2em 0.6em; vertical-align: middle; }
.notice { font-style: italic; color: #6a737b; }
.qbank-blank { display: inline-block; }
)css";

constexpr std::string_view kMathJaxConfig =
  "<script>window.MathJax = { tex: { inlineMath: [['\\\\(', '\\\\)']], displayMath: [['$$', '$$'], ['\\\\[', "
  "'\\\\]']] } };</script>";

void render_choices(std::string& out, const ChoiceSet& set)
{
  std::size_t correct = correct_index(set);
  auto row = [&out](const Choice& choice, bool is_correct) {
    out += "<div class=\"choice";
    out += is_correct ? " correct" : "";
    out += "\"><input type=\"radio\" disabled";
    out += is_correct ? " checked" : "";
    out += "> <span class=\"fraction\">" + format_fraction(choice.fraction) + "%</span> <span class=\"choicetext\">"
           + choice.text + "</span></div>\n";
  };
  out += "<div class=\"ablock\">\n";
  if (correct < set.choices.size()) {
    row(set.choices[correct], true);
  }
  for (std::size_t i = 0; i < set.choices.size(); ++i) {
    if (i != correct) {
      row(set.choices[i], false);
    }
  }
  out += "</div>\n";
}

void render_answer_input(std::string& out, const std::string& accepted, const std::string& extra)
{
  out += "<div class=\"ablock\"><label>Answer:</label> <input type=\"text\" disabled size=\"20\">";
  out += "<span class=\"accepted\">" + accepted + "</span>" + extra + "</div>\n";
}

void render_matching(std::string& out, const MatchPairList& list)
{
  out += "<table class=\"matching\">\n";
  for (const auto& pair : list.pairs) {
    out += "<tr><td class=\"prompt\">" + pair.prompt + "</td><td><select disabled>";
    // Options follow subquestion order; each row preselects its own match.
    std::vector<std::string_view> listed;
    for (const auto& option : list.pairs) {
      if (std::find(listed.begin(), listed.end(), option.match) != listed.end()) {
        continue;
      }
      listed.push_back(option.match);
      out += "<option";
      out += option.match == pair.match ? " selected" : "";
      out += ">" + html_escape(option.match) + "</option>";
    }
    out += "</select></td></tr>\n";
  }
  out += "</table>\n";
}

void render_question(std::string& out, const Question& question, std::size_t ordinal)
{
  const std::string name = question.name.empty() ? "Q" + std::to_string(ordinal) : question.name;
  out += "<div class=\"que " + std::string(xml_type_name(question.kind())) + "\" id=\"q" + std::to_string(ordinal)
         + "\">\n";
  out += "<div class=\"info\"><span class=\"qno\">" + std::to_string(ordinal) + "</span><h3 class=\"qname\">"
         + html_escape(name) + "</h3><span class=\"qtype\">" + std::string(kind_label(question.kind()))
         + "</span></div>\n";
  out += "<div class=\"content\">\n<div class=\"qtext\">" + question.stem + "</div>\n";
  std::visit(
    [&out](const auto& payload) {
      using T = std::decay_t<decltype(payload)>;
      if constexpr (std::is_same_v<T, ChoiceSet>) {
        render_choices(out, payload);
      } else if constexpr (std::is_same_v<T, NumericalAnswerSet>) {
        std::string accepted;
        for (double answer : payload.answers) {
          accepted += (accepted.empty() ? "" : " | ") + format_number(answer);
        }
        render_answer_input(out, accepted,
                            "<span class=\"tolerance\">(&plusmn;" + format_number(payload.tolerance) + ")</span>");
      } else if constexpr (std::is_same_v<T, ShortAnswerSet>) {
        std::string accepted;
        for (const auto& answer : payload.answers) {
          accepted += (accepted.empty() ? "" : " | ") + html_escape(answer);
        }
        render_answer_input(out, accepted, "");
      } else if constexpr (std::is_same_v<T, MatchPairList>) {
        render_matching(out, payload);
      }
    },
    question.payload);
  out += "</div>\n</div>\n";
}

std::string category_heading(const std::string& path)
{
  return "<h2 class=\"category\">" + (path.empty() ? std::string("(default category)") : html_escape(path))
         + "</h2>\n";
}

} // namespace

std::string render_preview_html(const BankContent& content, const PreviewOptions& options)
{
  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>" + html_escape(options.title) + "</title>\n";
  out += "<style>" + std::string(kStyle) + "</style>\n";
  out += kMathJaxConfig;
  out += '\n';
  if (options.inline_math_script) {
    out += "<script>\n" + read_file(*options.inline_math_script) + "\n</script>\n";
  } else {
    out += "<script id=\"MathJax-script\" async src=\"" + std::string(kMathJaxUrl) + "\"></script>\n";
  }
  out += "</head>\n<body>\n<h1>" + html_escape(options.title) + "</h1>\n";
  out += "<p class=\"summary\">" + std::to_string(content.questions.size()) + " questions</p>\n";

  if (content.questions.empty()) {
    out += "<p class=\"notice\">No questions in this bank.</p>\n";
  }
  auto mark = content.categories.begin();
  for (std::size_t i = 0; i < content.questions.size(); ++i) {
    while (mark != content.categories.end() && mark->position == i) {
      out += category_heading(mark->path);
      ++mark;
    }
    render_question(out, content.questions[i], i + 1);
  }
  out += "</body>\n</html>\n";
  return out;
}

std::filesystem::path render_preview(const BankContent& content, const std::filesystem::path& output_path,
                                     const PreviewOptions& options)
{
  write_file_atomic(output_path, render_preview_html(content, options));
  return output_path;
}

std::filesystem::path make_temp_preview_path()
{
  std::string pattern = (std::filesystem::temp_directory_path() / "qbank-preview-XXXXXX.html").string();
  int fd = ::mkstemps(pattern.data(), 5);
  if (fd < 0) {
    throw IoError(pattern, std::strerror(errno));
  }
  ::close(fd);
  return pattern;
}

std::filesystem::path preview(const QuestionBank& bank, const PreviewOptions& options)
{
  auto path = render_preview(bank.content(), make_temp_preview_path(), options);
  bool launched = false;
  if (std::getenv(kNoBrowserEnv) == nullptr) {
#if defined(__APPLE__)
    const char* opener = "open";
#else
    const char* opener = "xdg-open";
#endif
    std::string command = std::string(opener) + " '" + path.string() + "' >/dev/null 2>&1";
    launched = std::system(command.c_str()) == 0;
  }
  if (!launched) {
    std::cout << "preview written to " << path.string() << '\n';
  }
  return path;
}

} // namespace qbank
