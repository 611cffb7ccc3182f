#pragma once

#include "wordsig/corpus.hpp"
#include "wordsig/matrix.hpp"
#include "wordsig/vocabulary.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wordsig {

/// Skip-gram negative-sampling hyperparameters. Defaults reproduce
/// `-cbow 0 -size 100 -window 10 -negative 5 -hs 0 -sample 1e-4 -iter 20 -min-count 1`.
struct TrainConfig
{
  std::size_t   dim       = 100;
  std::size_t   window    = 10;  ///< maximum context offset
  std::size_t   negatives = 5;
  double        sample    = 1e-4;
  std::size_t   epochs    = 20;
  std::uint64_t min_count = 1;
  double        alpha     = 0.025;
  unsigned      workers   = 1;
  std::uint64_t seed      = 1;

  /// Evaluate the sigmoid exactly instead of through the lookup table.
  bool exact_sigmoid = false;
  /// Accumulate the mean per-pair objective of every epoch.
  bool track_loss = false;
  /// Upper bound on the bytes of both parameter matrices.
  std::uint64_t max_parameter_bytes = std::uint64_t{8} << 30;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

/// Vocabulary plus input (word) vectors W and output (context) vectors W'.
/// Row i of each matrix belongs to vocabulary index i. Models loaded from a
/// vector file carry no output matrix.
struct EmbeddingModel
{
  Vocabulary    vocab;
  Matrix<float> input;
  Matrix<float> output;

  std::size_t dim() const noexcept
  {
    return input.cols();
  }

  std::span<float const> vector(TermIndex index) const noexcept
  {
    return input.row(index);
  }
};

struct TrainReport
{
  std::size_t   epochs           = 0;
  std::uint64_t tokens_processed = 0;  ///< occurrences read, before subsampling
  std::uint64_t tokens_trained   = 0;  ///< occurrences kept by subsampling
  std::uint64_t pairs            = 0;
  double        final_alpha      = 0.0;
  /// Mean per-pair objective per epoch, filled when `track_loss` is set.
  std::vector<double> epoch_loss;
};

struct TrainObserver
{
  /// Called for every trained (center, context) pair from the worker threads;
  /// must be thread-safe when workers > 1.
  std::function<void(TermIndex center, TermIndex context)> on_pair;
  /// Called by worker 0 after each of its epochs.
  std::function<void(std::size_t epoch, double alpha)> on_epoch;
};

/// Probability of keeping one occurrence of a term with count `tf` among
/// `total` tokens: min(1, (sqrt(tf / (t N)) + 1) * (t N) / tf).
/// Throws std::domain_error when tf == 0 or t <= 0.
double subsample_keep_prob(std::uint64_t tf, std::uint64_t total, double threshold);

/// Trains the model on `corpus`. Documents are split among `workers` threads
/// that update the shared matrices without locking; only workers == 1 is
/// bit-reproducible for a fixed seed.
EmbeddingModel train(TokenizedCorpus const &corpus, TrainConfig const &config,
                     TrainReport *report = nullptr, TrainObserver const &observer = {});

/// Same, with a prebuilt vocabulary. Tokens outside the vocabulary are skipped.
EmbeddingModel train(TokenizedCorpus const &corpus, Vocabulary vocab, TrainConfig const &config,
                     TrainReport *report = nullptr, TrainObserver const &observer = {});

}  // namespace wordsig
