#pragma once

#include "qbank/bank.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qbank {

inline constexpr std::uint64_t kDefaultMediaWarnBytes = 10ull * 1024 * 1024;

struct BankStats
{
  std::size_t questions = 0;
  std::map<std::string, std::size_t> per_kind;     // keyed by xml type name
  std::map<std::string, std::size_t> per_category; // "" = default category
  std::uint64_t media_bytes = 0;
  std::vector<std::string> warnings;
};

// Media size warnings are raised per question above `media_warn_bytes`.
BankStats compute_stats(const BankContent& content, std::uint64_t media_warn_bytes = kDefaultMediaWarnBytes);

std::string format_stats(const BankStats& stats);

} // namespace qbank
