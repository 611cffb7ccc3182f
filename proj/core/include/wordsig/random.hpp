#pragma once

#include <cstdint>
#include <random>

namespace wordsig {

/// Engine used by every stochastic stage. Only raw engine output is consumed,
/// so streams are identical across standard library implementations.
using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream `stream` derived from a user seed.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0)
{
  return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng &rng) noexcept
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) for n < 2^32 (multiply-shift).
inline std::uint32_t uniform_below(Rng &rng, std::uint32_t n) noexcept
{
  return static_cast<std::uint32_t>(((rng() >> 32) * n) >> 32);
}

}  // namespace wordsig
