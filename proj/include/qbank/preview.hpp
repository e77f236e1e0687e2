#pragma once

#include "qbank/bank.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace qbank {

inline constexpr const char* kMathJaxUrl = "https://cdn.jsdelivr.net/npm/mathjax@3/es5/tex-mml-chtml.js";

// Set to any value to stop preview() from launching a browser.
inline constexpr const char* kNoBrowserEnv = "QBANK_NO_BROWSER";

struct PreviewOptions
{
  // Local copy of the math renderer to inline instead of the CDN script
  // tag, for fully offline previews.
  std::optional<std::filesystem::path> inline_math_script;
  std::string title = "Question bank preview";
};

// Instructor preview page. Per question: its name (or "Q<n>"), the stem
// untouched, and a kind-specific body. Multiple-choice lists the correct
// choice first, numerical and short answers sit beside a disabled input,
// matching selects show the right match for each prompt.
std::string render_preview_html(const BankContent& content, const PreviewOptions& options = {});

// Writes render_preview_html() to `output_path` atomically and returns it.
std::filesystem::path render_preview(const BankContent& content, const std::filesystem::path& output_path,
                                     const PreviewOptions& options = {});

// Renders to a fresh temporary file and asks the system browser to open it.
// If no browser can be launched the path is printed instead.
std::filesystem::path preview(const QuestionBank& bank, const PreviewOptions& options = {});

// New unique "qbank-preview-XXXXXX.html" path in the temp directory. The
// file is created empty so concurrent calls never collide.
std::filesystem::path make_temp_preview_path();

} // namespace qbank
