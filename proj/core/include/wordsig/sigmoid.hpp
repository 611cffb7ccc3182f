#pragma once

#include <array>
#include <cmath>
#include <concepts>

namespace wordsig {

struct ExactSigmoid
{
  template <std::floating_point Real>
  Real operator()(Real x) const noexcept
  {
    return Real{1} / (Real{1} + std::exp(-x));
  }
};

/// Sigmoid sampled at 1000 intervals over [-6, 6] with linear interpolation;
/// inputs outside the range clamp to the end values. Absolute error < 1e-5
/// inside the range.
class SigmoidTable
{
public:
  static constexpr int   kSlots  = 1000;
  static constexpr float kMaxExp = 6.0f;

  SigmoidTable() noexcept;

  float operator()(float x) const noexcept
  {
    if (x <= -kMaxExp)
    {
      return table_.front();
    }
    if (x >= kMaxExp)
    {
      return table_.back();
    }
    float const pos  = (x + kMaxExp) * (kSlots / (2.0f * kMaxExp));
    int const   slot = static_cast<int>(pos);
    if (slot >= kSlots)
    {
      return table_.back();
    }
    float const frac = pos - static_cast<float>(slot);
    return table_[slot] + frac * (table_[slot + 1] - table_[slot]);
  }

private:
  std::array<float, kSlots + 1> table_{};
};

}  // namespace wordsig
