#include "qbank/stats.hpp"

#include "qbank/media.hpp"

#include <sstream>

namespace qbank {

BankStats compute_stats(const BankContent& content, std::uint64_t media_warn_bytes)
{
  BankStats stats;
  stats.questions = content.questions.size();
  for (std::size_t i = 0; i < content.questions.size(); ++i) {
    Question question = content.questions[i];
    ++stats.per_kind[std::string(xml_type_name(question.kind()))];
    ++stats.per_category[question.category];

    std::uint64_t bytes = 0;
    for_each_text(question, [&bytes](std::string& text) { bytes += embedded_media_bytes(text); });
    stats.media_bytes += bytes;
    if (bytes > media_warn_bytes) {
      std::string label = question.name.empty() ? "Q" + std::to_string(i + 1) : question.name;
      stats.warnings.push_back("question " + std::to_string(i + 1) + " (\"" + label + "\") embeds "
                               + std::to_string(bytes) + " bytes of media, above the "
                               + std::to_string(media_warn_bytes) + " byte limit");
    }
  }
  return stats;
}

std::string format_stats(const BankStats& stats)
{
  std::ostringstream out;
  out << "questions: " << stats.questions << '\n';
  for (std::string_view kind : {"multichoice", "numerical", "shortanswer", "matching"}) {
    auto it = stats.per_kind.find(std::string(kind));
    out << "  " << kind << ": " << (it == stats.per_kind.end() ? 0 : it->second) << '\n';
  }
  out << "categories:\n";
  for (const auto& [category, count] : stats.per_category) {
    out << "  " << (category.empty() ? "(default)" : category) << ": " << count << '\n';
  }
  out << "embedded media bytes: " << stats.media_bytes << '\n';
  return out.str();
}

} // namespace qbank
