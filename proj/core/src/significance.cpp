#include "wordsig/significance.hpp"

#include "wordsig/pos.hpp"
#include "wordsig/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace wordsig {

double vector_length(std::span<float const> vector) noexcept
{
  double sum = 0.0;
  for (float const x : vector)
  {
    sum += static_cast<double>(x) * static_cast<double>(x);
  }
  return std::sqrt(sum);
}

double vector_length(EmbeddingModel const &model, std::string_view term)
{
  return vector_length(model.vector(model.vocab.index(term)));
}

double cosine_similarity(std::span<float const> a, std::span<float const> b)
{
  if (a.size() != b.size())
  {
    throw std::domain_error("cosine similarity of vectors with different sizes");
  }
  double ab = 0.0;
  double aa = 0.0;
  double bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    double const x = a[i];
    double const y = b[i];
    ab += x * y;
    aa += x * x;
    bb += y * y;
  }
  if (aa == 0.0 || bb == 0.0)
  {
    throw std::domain_error("cosine similarity of a zero-length vector");
  }
  return std::clamp(ab / (std::sqrt(aa) * std::sqrt(bb)), -1.0, 1.0);
}

namespace {

std::vector<TermIndex> eligible_terms(Vocabulary const &vocab, std::uint64_t min_tf,
                                      std::optional<std::uint64_t> max_tf)
{
  std::vector<TermIndex> terms;
  for (std::size_t i = 0; i < vocab.size(); ++i)
  {
    auto const tf = vocab.count(static_cast<TermIndex>(i));
    if (tf >= min_tf && (!max_tf || tf <= *max_tf))
    {
      terms.push_back(static_cast<TermIndex>(i));
    }
  }
  return terms;
}

}  // namespace

SimilarityHistogram similarity_histogram(EmbeddingModel const &model, HistogramOptions const &options)
{
  if (options.bins == 0)
  {
    throw std::invalid_argument("histogram needs at least one bin");
  }
  auto const terms = eligible_terms(model.vocab, options.min_tf, options.max_tf);
  if (terms.size() < 2)
  {
    throw std::invalid_argument("similarity histogram needs at least two eligible terms, found " +
                                std::to_string(terms.size()));
  }
  if (terms.size() > std::numeric_limits<std::uint32_t>::max())
  {
    throw std::invalid_argument("too many eligible terms");
  }

  std::vector<double> lengths(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
  {
    lengths[i] = vector_length(model.vector(terms[i]));
  }

  SimilarityHistogram hist;
  hist.min_tf = options.min_tf;
  hist.max_tf = options.max_tf;
  hist.counts.assign(options.bins, 0);
  hist.bin_edges.resize(options.bins + 1);
  for (std::size_t b = 0; b <= options.bins; ++b)
  {
    hist.bin_edges[b] = -1.0 + 2.0 * static_cast<double>(b) / static_cast<double>(options.bins);
  }

  Rng          rng = make_rng(options.seed, 0);
  auto const   n   = static_cast<std::uint32_t>(terms.size());
  double       sum = 0.0;
  for (std::uint64_t p = 0; p < options.pair_count; ++p)
  {
    std::uint32_t const i = uniform_below(rng, n);
    std::uint32_t const j = uniform_below(rng, n);
    if (i == j || lengths[i] == 0.0 || lengths[j] == 0.0)
    {
      ++hist.rejected;
      continue;
    }
    double const c = cosine_similarity(model.vector(terms[i]), model.vector(terms[j]));
    auto bin = static_cast<std::size_t>((c + 1.0) * 0.5 * static_cast<double>(options.bins));
    bin      = std::min(bin, options.bins - 1);
    ++hist.counts[bin];
    sum += c;
    ++hist.sample_count;
  }
  hist.sample_mean = hist.sample_count ? sum / static_cast<double>(hist.sample_count) : 0.0;
  return hist;
}

MeanVector mean_vector(EmbeddingModel const &model, std::uint64_t min_tf)
{
  MeanVector mean;
  mean.components.assign(model.dim(), 0.0);
  for (std::size_t i = 0; i < model.vocab.size(); ++i)
  {
    if (model.vocab.count(static_cast<TermIndex>(i)) < min_tf)
    {
      continue;
    }
    auto const row = model.vector(static_cast<TermIndex>(i));
    for (std::size_t k = 0; k < row.size(); ++k)
    {
      mean.components[k] += row[k];
    }
    ++mean.term_count;
  }
  if (mean.term_count == 0)
  {
    throw std::invalid_argument("no term with tf >= " + std::to_string(min_tf));
  }
  double sq = 0.0;
  for (auto &c : mean.components)
  {
    c /= static_cast<double>(mean.term_count);
    sq += c * c;
  }
  mean.length = std::sqrt(sq);
  return mean;
}

unsigned bin_index(std::uint64_t tf)
{
  if (tf == 0)
  {
    throw std::domain_error("frequency bins start at tf = 1");
  }
  return static_cast<unsigned>(std::bit_width(tf));
}

BinRange bin_range(unsigned k)
{
  if (k < 1 || k > 64)
  {
    throw std::domain_error("bin index out of range");
  }
  std::uint64_t const lo = std::uint64_t{1} << (k - 1);
  return {lo, lo + (lo - 1)};
}

std::vector<BinSummary> bin_means(std::span<WordStat const> stats)
{
  std::map<unsigned, std::pair<std::size_t, double>> acc;
  for (auto const &s : stats)
  {
    auto &[count, sum] = acc[bin_index(s.tf)];
    ++count;
    sum += s.v;
  }
  std::vector<BinSummary> bins;
  bins.reserve(acc.size());
  for (auto const &[k, entry] : acc)
  {
    auto const range = bin_range(k);
    bins.push_back({k, range.lo, range.hi, entry.first, entry.second / static_cast<double>(entry.first)});
  }
  return bins;
}

std::vector<WordStat> top_by_length_in_bin(std::span<WordStat const> stats, unsigned k, std::size_t n)
{
  std::vector<WordStat> members;
  for (auto const &s : stats)
  {
    if (bin_index(s.tf) == k)
    {
      members.push_back(s);
    }
  }
  auto const keep = std::min(n, members.size());
  std::partial_sort(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(keep), members.end(),
                    [](WordStat const &a, WordStat const &b) {
                      return a.v != b.v ? a.v > b.v : a.term < b.term;
                    });
  members.resize(keep);
  return members;
}

std::vector<WordStat> word_stats(EmbeddingModel const &model, PosLexicon const *lexicon)
{
  std::vector<WordStat> stats;
  stats.reserve(model.vocab.size());
  for (std::size_t i = 0; i < model.vocab.size(); ++i)
  {
    auto const index = static_cast<TermIndex>(i);
    WordStat   s{model.vocab.term(index), model.vocab.count(index), vector_length(model.vector(index)),
               std::nullopt};
    if (lexicon != nullptr)
    {
      if (auto const tag = lexicon->tag(s.term))
      {
        s.pos = std::string(*tag);
      }
    }
    stats.push_back(std::move(s));
  }
  return stats;
}

}  // namespace wordsig
