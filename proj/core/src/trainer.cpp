#include "wordsig/trainer.hpp"

#include "wordsig/errors.hpp"
#include "wordsig/noise_table.hpp"
#include "wordsig/random.hpp"
#include "wordsig/sgns_step.hpp"
#include "wordsig/sigmoid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace wordsig {

void TrainConfig::validate() const
{
  if (dim < 1)
  {
    throw ConfigError("size (dimension) must be >= 1");
  }
  if (window < 1)
  {
    throw ConfigError("window must be >= 1");
  }
  if (!(sample > 0.0 && sample <= 1.0))
  {
    throw ConfigError("sample must be in (0, 1]");
  }
  if (epochs < 1)
  {
    throw ConfigError("iter (epochs) must be >= 1");
  }
  if (min_count < 1)
  {
    throw ConfigError("min-count must be >= 1");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha))
  {
    throw ConfigError("alpha must be > 0");
  }
  if (workers < 1)
  {
    throw ConfigError("threads must be >= 1");
  }
}

double subsample_keep_prob(std::uint64_t tf, std::uint64_t total, double threshold)
{
  if (tf == 0)
  {
    throw std::domain_error("subsampling needs tf >= 1");
  }
  if (!(threshold > 0.0))
  {
    throw std::domain_error("subsampling threshold must be positive");
  }
  double const f     = static_cast<double>(tf);
  double const scale = threshold * static_cast<double>(total);
  return std::min(1.0, (std::sqrt(f / scale) + 1.0) * scale / f);
}

namespace {

constexpr int    kMaxNegativeRetries = 10;
constexpr double kMinAlphaFraction   = 1e-4;

/// Corpus as vocabulary indices, documents delimited by offsets.
struct IndexedCorpus
{
  std::vector<TermIndex>   tokens;
  std::vector<std::size_t> offsets{0};
};

IndexedCorpus index_corpus(TokenizedCorpus const &corpus, Vocabulary const &vocab)
{
  IndexedCorpus indexed;
  indexed.tokens.reserve(corpus.total_tokens());
  indexed.offsets.reserve(corpus.document_count() + 1);
  for (auto const &doc : corpus.documents())
  {
    for (auto const &token : doc)
    {
      if (auto const i = vocab.find(token))
      {
        indexed.tokens.push_back(*i);
      }
    }
    indexed.offsets.push_back(indexed.tokens.size());
  }
  return indexed;
}

struct WorkerStats
{
  std::uint64_t       processed = 0;
  std::uint64_t       trained   = 0;
  std::uint64_t       pairs     = 0;
  double              alpha     = 0.0;
  std::vector<double> loss_sum;
  std::vector<double> loss_pairs;
};

struct SharedState
{
  SharedState(EmbeddingModel &model_, IndexedCorpus const &corpus_, NoiseTable const &noise_,
              std::vector<double> const &keep_prob_, TrainConfig const &config_,
              TrainObserver const &observer_, std::uint64_t scheduled_tokens_)
    : model(model_)
    , corpus(corpus_)
    , noise(noise_)
    , keep_prob(keep_prob_)
    , config(config_)
    , observer(observer_)
    , scheduled_tokens(scheduled_tokens_)
  {}

  EmbeddingModel            &model;
  IndexedCorpus const       &corpus;
  NoiseTable const          &noise;
  std::vector<double> const &keep_prob;
  TrainConfig const         &config;
  TrainObserver const       &observer;
  std::uint64_t              scheduled_tokens;
  std::atomic<std::uint64_t> processed{0};
  std::atomic<bool>          stop{false};
  std::mutex                 error_mutex;
  std::exception_ptr         error;
};

template <bool kTrackLoss, class Sigmoid>
void run_worker(SharedState &shared, unsigned worker, std::size_t doc_begin, std::size_t doc_end,
                WorkerStats &stats)
{
  auto const &config = shared.config;
  auto const &corpus = shared.corpus;
  auto       &input  = shared.model.input;
  auto       &output = shared.model.output;

  Sigmoid const sigmoid{};
  Rng           rng = make_rng(config.seed, worker + 1);

  std::vector<TermIndex> kept;
  std::vector<TermIndex> negatives(config.negatives);
  std::vector<float>     scratch(config.dim);

  auto const   window   = static_cast<std::uint32_t>(config.window);
  double const alpha0   = config.alpha;
  double const min_alpha = alpha0 * kMinAlphaFraction;
  float        alpha    = static_cast<float>(alpha0);

  stats.loss_sum.assign(config.epochs, 0.0);
  stats.loss_pairs.assign(config.epochs, 0.0);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch)
  {
    for (std::size_t d = doc_begin; d < doc_end; ++d)
    {
      if (shared.stop.load(std::memory_order_relaxed))
      {
        return;
      }
      auto const first = corpus.offsets[d];
      auto const last  = corpus.offsets[d + 1];

      kept.clear();
      for (std::size_t t = first; t < last; ++t)
      {
        TermIndex const term = corpus.tokens[t];
        double const    p    = shared.keep_prob[term];
        if (p >= 1.0 || uniform01(rng) < p)
        {
          kept.push_back(term);
        }
      }
      stats.trained += kept.size();

      for (std::size_t i = 0; i < kept.size(); ++i)
      {
        std::size_t const b  = 1 + uniform_below(rng, window);
        std::size_t const lo = i >= b ? i - b : 0;
        std::size_t const hi = std::min(kept.size() - 1, i + b);
        TermIndex const   center = kept[i];
        for (std::size_t j = lo; j <= hi; ++j)
        {
          if (j == i)
          {
            continue;
          }
          TermIndex const context = kept[j];

          std::size_t drawn = 0;
          for (std::size_t k = 0; k < negatives.size(); ++k)
          {
            for (int retry = 0; retry < kMaxNegativeRetries; ++retry)
            {
              TermIndex const candidate = shared.noise.sample(rng);
              if (candidate != context && candidate != center)
              {
                negatives[drawn++] = candidate;
                break;
              }
            }
          }

          double const loss = sgns_step<kTrackLoss>(
              input, output, center, context, std::span<TermIndex const>(negatives.data(), drawn),
              alpha, sigmoid, std::span<float>(scratch));
          if constexpr (kTrackLoss)
          {
            stats.loss_sum[epoch] += loss;
            stats.loss_pairs[epoch] += 1.0;
          }
          ++stats.pairs;
          if (shared.observer.on_pair)
          {
            shared.observer.on_pair(center, context);
          }
        }
      }

      std::uint64_t const doc_tokens = last - first;
      stats.processed += doc_tokens;
      std::uint64_t const done =
          shared.processed.fetch_add(doc_tokens, std::memory_order_relaxed) + doc_tokens;
      double const progress =
          static_cast<double>(done) / static_cast<double>(shared.scheduled_tokens + 1);
      alpha       = static_cast<float>(std::max(alpha0 * (1.0 - progress), min_alpha));
      stats.alpha = alpha;
    }
    if (worker == 0 && shared.observer.on_epoch)
    {
      shared.observer.on_epoch(epoch + 1, alpha);
    }
  }
}

template <bool kTrackLoss, class Sigmoid>
void guarded_worker(SharedState &shared, unsigned worker, std::size_t doc_begin, std::size_t doc_end,
                    WorkerStats &stats)
{
  try
  {
    run_worker<kTrackLoss, Sigmoid>(shared, worker, doc_begin, doc_end, stats);
  }
  catch (...)
  {
    std::lock_guard<std::mutex> lock(shared.error_mutex);
    if (!shared.error)
    {
      shared.error = std::current_exception();
    }
    shared.stop.store(true);
  }
}

using WorkerFn = void (*)(SharedState &, unsigned, std::size_t, std::size_t, WorkerStats &);

WorkerFn select_worker(TrainConfig const &config)
{
  if (config.exact_sigmoid)
  {
    return config.track_loss ? &guarded_worker<true, ExactSigmoid> : &guarded_worker<false, ExactSigmoid>;
  }
  return config.track_loss ? &guarded_worker<true, SigmoidTable> : &guarded_worker<false, SigmoidTable>;
}

}  // namespace

EmbeddingModel train(TokenizedCorpus const &corpus, TrainConfig const &config, TrainReport *report,
                     TrainObserver const &observer)
{
  config.validate();
  return train(corpus, build_vocabulary(corpus, config.min_count), config, report, observer);
}

EmbeddingModel train(TokenizedCorpus const &corpus, Vocabulary vocab, TrainConfig const &config,
                     TrainReport *report, TrainObserver const &observer)
{
  config.validate();
  if (corpus.empty())
  {
    throw EmptyCorpusError("cannot train on an empty corpus");
  }
  if (vocab.empty())
  {
    throw EmptyCorpusError("no term reaches min-count " + std::to_string(config.min_count));
  }

  double const parameter_bytes = 2.0 * static_cast<double>(vocab.size()) *
                                 static_cast<double>(config.dim) * sizeof(float);
  if (parameter_bytes > static_cast<double>(config.max_parameter_bytes))
  {
    throw ConfigError("model needs " + std::to_string(static_cast<std::uint64_t>(parameter_bytes)) +
                      " bytes, above the limit of " + std::to_string(config.max_parameter_bytes));
  }

  IndexedCorpus const indexed = index_corpus(corpus, vocab);
  std::uint64_t const total   = indexed.tokens.size();

  std::vector<double> keep_prob(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i)
  {
    keep_prob[i] = subsample_keep_prob(vocab.count(static_cast<TermIndex>(i)), total, config.sample);
  }
  NoiseTable const noise(vocab);

  EmbeddingModel model{std::move(vocab), Matrix<float>(0, 0), Matrix<float>(0, 0)};
  std::size_t const rows = model.vocab.size();
  model.input  = Matrix<float>(rows, config.dim);
  model.output = Matrix<float>(rows, config.dim, 0.0f);
  {
    Rng          rng   = make_rng(config.seed, 0);
    double const scale = 1.0 / static_cast<double>(config.dim);
    for (float &x : model.input.values())
    {
      x = static_cast<float>((uniform01(rng) - 0.5) * scale);
    }
  }

  SharedState shared(model, indexed, noise, keep_prob, config, observer, total * config.epochs);

  std::size_t const documents = corpus.document_count();
  unsigned const    workers =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(config.workers, documents)));
  std::vector<WorkerStats> stats(workers);
  WorkerFn const           worker_fn = select_worker(config);

  if (workers == 1)
  {
    worker_fn(shared, 0, 0, documents, stats[0]);
  }
  else
  {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
      std::size_t const begin = documents * w / workers;
      std::size_t const end   = documents * (w + 1) / workers;
      threads.emplace_back(worker_fn, std::ref(shared), w, begin, end, std::ref(stats[w]));
    }
    for (auto &t : threads)
    {
      t.join();
    }
  }
  if (shared.error)
  {
    std::rethrow_exception(shared.error);
  }

  if (report != nullptr)
  {
    *report        = TrainReport{};
    report->epochs = config.epochs;
    report->final_alpha = config.alpha;
    for (auto const &s : stats)
    {
      report->tokens_processed += s.processed;
      report->tokens_trained += s.trained;
      report->pairs += s.pairs;
      if (s.processed > 0)
      {
        report->final_alpha = std::min(report->final_alpha, s.alpha);
      }
    }
    if (config.track_loss)
    {
      for (std::size_t e = 0; e < config.epochs; ++e)
      {
        double sum   = 0.0;
        double pairs = 0.0;
        for (auto const &s : stats)
        {
          sum += s.loss_sum[e];
          pairs += s.loss_pairs[e];
        }
        report->epoch_loss.push_back(pairs > 0 ? sum / pairs : 0.0);
      }
    }
  }
  return model;
}

}  // namespace wordsig
