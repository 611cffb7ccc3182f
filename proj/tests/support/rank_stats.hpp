#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wordsig::testing {

/// 1-based ranks with ties sharing their average rank.
inline std::vector<double> average_ranks(std::vector<double> const &x)
{
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();)
  {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]])
    {
      ++j;
    }
    double const rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k)
    {
      ranks[order[k]] = rank;
    }
    i = j + 1;
  }
  return ranks;
}

inline double pearson(std::vector<double> const &x, std::vector<double> const &y)
{
  if (x.size() != y.size() || x.size() < 2)
  {
    throw std::invalid_argument("pearson needs two equally sized samples");
  }
  double const n  = static_cast<double>(x.size());
  double const mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double const my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double       sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman(std::vector<double> const &x, std::vector<double> const &y)
{
  return pearson(average_ranks(x), average_ranks(y));
}

}  // namespace wordsig::testing
