#pragma once

#include "wordsig/corpus.hpp"
#include "wordsig/trainer.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace wordsig::cli {

struct IngestOptions
{
  std::filesystem::path input;
  CorpusFormat          format = CorpusFormat::kAuto;
  std::filesystem::path tokens_out;
  std::filesystem::path vocab_out;
  unsigned              threads = 1;
};

struct IngestSummary
{
  std::size_t   documents  = 0;
  std::uint64_t tokens     = 0;
  std::size_t   vocabulary = 0;
};

/// Reads, strips and tokenizes a raw corpus; writes the tokenized corpus and
/// its full vocabulary.
IngestSummary cmd_ingest(IngestOptions const &options, std::ostream &log);

struct TrainOptions
{
  std::filesystem::path tokens;
  std::filesystem::path output;
  /// Optional vocabulary to train on (min-count is applied to it).
  std::filesystem::path vocab;
  /// Where to write the vocabulary of the trained model, if anywhere.
  std::filesystem::path save_vocab;
  TrainConfig           config;
};

TrainReport cmd_train(TrainOptions const &options, std::ostream &log);

struct StatsOptions
{
  std::filesystem::path        vectors;
  std::filesystem::path        vocab;
  std::filesystem::path        tagged;  ///< optional tagger output
  std::filesystem::path        out_dir;
  std::string                  corpus_name = "corpus";
  std::uint64_t                min_tf      = 2;
  std::optional<std::uint64_t> max_tf;
  std::uint64_t                pairs     = 1'000'000;
  std::size_t                  hist_bins = 100;
  std::size_t                  top       = 40;
  std::uint64_t                seed      = 1;
};

struct StatsSummary
{
  double      mean_cosine       = 0.0;
  double      mean_vec_len      = 0.0;  ///< all terms
  double      mean_vec_len_tf2  = 0.0;  ///< terms with tf > 1, 0 when none
  std::size_t records           = 0;
};

/// Writes frequency.tsv, similarity_hist.csv, bins.tsv, explorer.json and,
/// with tagged tokens, classes.tsv into `out_dir`.
StatsSummary cmd_stats(StatsOptions const &options, std::ostream &log);

/// Static asset server plus the explorer data endpoint.
class ExplorerServer
{
public:
  /// Loads and validates the data file; throws ParseError on a malformed one.
  ExplorerServer(std::filesystem::path const &data_file, std::filesystem::path const &assets_dir);
  ~ExplorerServer();

  ExplorerServer(ExplorerServer const &)            = delete;
  ExplorerServer &operator=(ExplorerServer const &) = delete;

  /// Binds the socket; port 0 picks a free port. Throws std::runtime_error
  /// when the port cannot be bound.
  int bind(std::string const &host, int port);

  /// Serves until stop() is called.
  void listen();
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wordsig::cli
