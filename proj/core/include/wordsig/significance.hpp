#pragma once

#include "wordsig/trainer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordsig {

class PosLexicon;

/// One point of the v-tf plane.
struct WordStat
{
  std::string                term;
  std::uint64_t              tf = 0;
  double                     v  = 0.0;  ///< L2 norm of the input vector
  std::optional<std::string> pos;

  bool operator==(WordStat const &) const = default;
};

/// L2 norm, accumulated in double.
double vector_length(std::span<float const> vector) noexcept;

/// Length of the input vector of `term`; throws NotFoundError if unknown.
double vector_length(EmbeddingModel const &model, std::string_view term);

/// (a.b) / (|a| |b|), clamped to [-1, 1]. Throws std::domain_error when an
/// operand has zero length or the sizes differ.
double cosine_similarity(std::span<float const> a, std::span<float const> b);

struct HistogramOptions
{
  std::uint64_t                pair_count = 1'000'000;
  std::uint64_t                min_tf     = 2;
  std::optional<std::uint64_t> max_tf;
  std::size_t                  bins = 100;
  std::uint64_t                seed = 1;
};

struct SimilarityHistogram
{
  std::vector<double>          bin_edges;  ///< bins + 1 edges spanning [-1, 1]
  std::vector<std::uint64_t>   counts;
  double                       sample_mean  = 0.0;
  std::uint64_t                sample_count = 0;
  std::uint64_t                rejected     = 0;  ///< self-pairs and zero vectors
  std::uint64_t                min_tf       = 0;
  std::optional<std::uint64_t> max_tf;
};

/// Cosine similarity of `pair_count` term pairs drawn uniformly, with
/// replacement, from the terms with min_tf <= tf (<= max_tf). Draws that pick
/// the same term twice or a zero vector are rejected, not redrawn. Throws
/// std::invalid_argument when fewer than two terms are eligible.
SimilarityHistogram similarity_histogram(EmbeddingModel const &model, HistogramOptions const &options);

struct MeanVector
{
  std::vector<double> components;
  double              length     = 0.0;
  std::size_t         term_count = 0;
};

/// Unweighted mean of the input vectors of every term with tf >= min_tf.
/// Throws std::invalid_argument when no term qualifies.
MeanVector mean_vector(EmbeddingModel const &model, std::uint64_t min_tf = 1);

/// k such that 2^(k-1) <= tf <= 2^k - 1. Throws std::domain_error for tf = 0.
unsigned bin_index(std::uint64_t tf);

struct BinRange
{
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// [2^(k-1), 2^k - 1] for 1 <= k <= 64.
BinRange bin_range(unsigned k);

struct BinSummary
{
  unsigned      k  = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::size_t   member_count = 0;
  double        mean_v       = 0.0;

  bool operator==(BinSummary const &) const = default;
};

/// One summary per non-empty frequency bin, ascending k.
std::vector<BinSummary> bin_means(std::span<WordStat const> stats);

/// The `n` members of bin `k` with the longest vectors, descending v with
/// lexicographic ties.
std::vector<WordStat> top_by_length_in_bin(std::span<WordStat const> stats, unsigned k, std::size_t n);

/// One WordStat per vocabulary term in index order. With a lexicon, terms it
/// covers carry their majority tag.
std::vector<WordStat> word_stats(EmbeddingModel const &model, PosLexicon const *lexicon = nullptr);

}  // namespace wordsig
