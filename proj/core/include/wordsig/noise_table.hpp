#pragma once

#include "wordsig/random.hpp"
#include "wordsig/vocabulary.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wordsig {

/// Negative-sampling distribution P(i) = tf_i^power / sum_j tf_j^power,
/// sampled in O(1) with Walker's alias method.
class NoiseTable
{
public:
  NoiseTable() = default;

  /// Throws std::invalid_argument when `counts` is empty or holds a zero.
  static NoiseTable from_counts(std::span<std::uint64_t const> counts, double power = 0.75);

  explicit NoiseTable(Vocabulary const &vocab, double power = 0.75);

  std::size_t size() const noexcept
  {
    return probability_.size();
  }

  /// Exact normalized probability of index `i`.
  double probability(TermIndex i) const
  {
    return probability_.at(i);
  }

  std::span<double const> probabilities() const noexcept
  {
    return probability_;
  }

  TermIndex sample(Rng &rng) const noexcept
  {
    std::uint64_t const r      = rng();
    auto const          bucket = static_cast<TermIndex>(((r >> 32) * size()) >> 32);
    auto const          coin   = static_cast<std::uint32_t>(r);
    return coin < threshold_[bucket] ? bucket : alias_[bucket];
  }

private:
  std::vector<double>        probability_;
  // Acceptance threshold of each bucket scaled to 2^32.
  std::vector<std::uint64_t> threshold_;
  std::vector<TermIndex>     alias_;
};

}  // namespace wordsig
