#include "wordsig/sigmoid.hpp"

namespace wordsig {

SigmoidTable::SigmoidTable() noexcept
{
  for (int i = 0; i <= kSlots; ++i)
  {
    double const x = (2.0 * i / kSlots - 1.0) * kMaxExp;
    table_[i]      = static_cast<float>(1.0 / (1.0 + std::exp(-x)));
  }
}

}  // namespace wordsig
