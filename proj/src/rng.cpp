#include "qbank/rng.hpp"

#include <limits>

namespace qbank {

namespace {

std::uint64_t entropy_seed()
{
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

} // namespace

Rng::Rng(std::optional<std::uint64_t> seed)
  : m_seed(seed ? *seed : entropy_seed()),
    m_engine(m_seed)
{
}

std::uint64_t Rng::below(std::uint64_t bound)
{
  // Rejection keeps the draw exactly uniform: values at or above the largest
  // multiple of `bound` are redrawn.
  constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t value = m_engine();
  while (value > limit) {
    value = m_engine();
  }
  return value % bound;
}

} // namespace qbank
