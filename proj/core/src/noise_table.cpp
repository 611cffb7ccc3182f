#include "wordsig/noise_table.hpp"

#include <cmath>
#include <stdexcept>

namespace wordsig {

NoiseTable NoiseTable::from_counts(std::span<std::uint64_t const> counts, double power)
{
  if (counts.empty())
  {
    throw std::invalid_argument("noise table needs a non-empty vocabulary");
  }
  if (counts.size() > (std::uint64_t{1} << 32))
  {
    throw std::invalid_argument("noise table vocabulary too large");
  }

  NoiseTable table;
  auto const n = counts.size();
  table.probability_.resize(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (counts[i] == 0)
    {
      throw std::invalid_argument("noise table count must be positive");
    }
    table.probability_[i] = std::pow(static_cast<double>(counts[i]), power);
    total += table.probability_[i];
  }
  for (auto &p : table.probability_)
  {
    p /= total;
  }

  // Vose's construction on probabilities scaled by n.
  std::vector<double>    scaled(n);
  std::vector<TermIndex> small;
  std::vector<TermIndex> large;
  for (std::size_t i = 0; i < n; ++i)
  {
    scaled[i] = table.probability_[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<TermIndex>(i));
  }

  table.threshold_.assign(n, std::uint64_t{1} << 32);
  table.alias_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    table.alias_[i] = static_cast<TermIndex>(i);
  }

  while (!small.empty() && !large.empty())
  {
    TermIndex const s = small.back();
    small.pop_back();
    TermIndex const l = large.back();

    table.threshold_[s] = static_cast<std::uint64_t>(std::ldexp(scaled[s], 32));
    table.alias_[s]     = l;
    scaled[l]           = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0)
    {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Whatever remains is 1 up to rounding and keeps the full threshold.
  return table;
}

NoiseTable::NoiseTable(Vocabulary const &vocab, double power)
{
  std::vector<std::uint64_t> counts;
  counts.reserve(vocab.size());
  for (auto const &entry : vocab.entries())
  {
    counts.push_back(entry.count);
  }
  *this = from_counts(counts, power);
}

}  // namespace wordsig
