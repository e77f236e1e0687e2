#pragma once

#include "qbank/bank.hpp"

#include <string>
#include <string_view>

namespace qbank {

// Category paths are written under this prefix.
inline constexpr std::string_view kCourseCategoryRoot = "$course$/top";

// Wraps `text` in one or more CDATA sections. Any "]]>" is split across
// two adjacent sections; everything else passes through byte for byte.
std::string escape_for_cdata(std::string_view text);

// Moodle XML document for the bank: UTF-8, <quiz> root, one category
// question per set_category call followed by its questions. Throws
// EncodeError naming the question when text is not valid UTF-8 or holds
// characters XML 1.0 forbids.
std::string serialize_bank(const BankContent& content);
std::string serialize_bank(const QuestionBank& bank);

// Reads a document in the dialect written by serialize_bank. Unsupported
// question types (essay, truefalse, ...) and invalid questions are skipped
// with a warning on the returned bank. Throws ParseError with line and
// column for malformed XML; no partial bank is ever returned.
QuestionBank parse_bank(std::string_view xml, WarningSink sink = stderr_warning_sink);

} // namespace qbank
