#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace starconf {

inline constexpr std::uint64_t kDefaultSeed = 20140322;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t hash_tag(std::string_view tag) noexcept;

/// Seedable, splittable generator. A child stream depends only on the parent's
/// seed and the key, never on how much of the parent has been consumed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  SplitRng child(std::uint64_t key) const { return SplitRng(splitmix64(seed_ ^ splitmix64(key + 0x9e3779b97f4a7c15ull))); }
  SplitRng child(std::string_view tag) const { return child(hash_tag(tag)); }

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace starconf
