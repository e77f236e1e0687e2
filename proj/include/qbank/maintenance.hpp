#pragma once

#include "qbank/bank.hpp"

#include <cstddef>
#include <string_view>

namespace qbank {

// Literal, case-sensitive replacement in every name, stem, choice, short
// answer, match prompt and match. Numerical values are never touched.
// Returns the number of replacements. Throws ValidationError for an empty
// `from`, or if the edit would break a question invariant (the bank is then
// left unchanged).
std::size_t replace_text(QuestionBank& bank, std::string_view from, std::string_view to);

// Same, but `pattern` is an ECMAScript regular expression and `replacement`
// may use $1-style back references.
std::size_t replace_regex(QuestionBank& bank, std::string_view pattern, std::string_view replacement);

// Sets every wrong multiple-choice fraction to `fraction` (in [-100, 0]) and
// makes it the bank's rule for later questions. Returns the number of
// questions whose fractions changed.
std::size_t set_wrong_penalty(QuestionBank& bank, double fraction);

} // namespace qbank
