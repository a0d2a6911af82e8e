#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace s2gn {

using Rng = std::mt19937_64;

namespace detail {

// splitmix64 finalizer; good avalanche for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Derives an independent sub-seed from (base seed, purpose tag, index).
/// Deterministic, so parallel consumers get order-independent streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = detail::mix64(base);
  for (char c : tag) h = detail::mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return detail::mix64(h ^ index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform draw from [0, n). n must be positive.
inline std::size_t draw_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace s2gn
