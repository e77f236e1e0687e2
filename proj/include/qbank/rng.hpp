#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>

namespace qbank {

// Seeded generator whose draws are identical on every platform.
//
// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so bounded draws and shuffles are done here on top of the fully specified
// mt19937_64 engine.
class Rng
{
public:
  // No seed means system entropy.
  explicit Rng(std::optional<std::uint64_t> seed = std::nullopt);

  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::span<T> items)
  {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t seed() const noexcept { return m_seed; }

private:
  std::uint64_t m_seed;
  std::mt19937_64 m_engine;
};

} // namespace qbank
