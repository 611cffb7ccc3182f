#include "commands.hpp"

#include "wordsig/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace wordsig;
using namespace wordsig::cli;

void write_config(CLI::App const &command, std::string const &path)
{
  if (path.empty())
  {
    return;
  }
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot write " + path);
  }
  out << '[' << command.get_name() << "]\n" << command.config_to_str(true, false);
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Word embeddings and vector-length significance statistics for text corpora"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; options of a command go under its [section]");

  std::string format_name = "auto";
  std::string config_out;

  IngestOptions ingest;
  auto         *ingest_cmd = app.add_subcommand("ingest", "Tokenize a raw corpus and count its vocabulary");
  ingest_cmd->add_option("input,--input", ingest.input, "Corpus file or directory")->required();
  ingest_cmd->add_option("--format", format_name, "auto, tsv, text or arxiv")->capture_default_str();
  ingest_cmd->add_option("--tokens", ingest.tokens_out, "Tokenized corpus output")->required();
  ingest_cmd->add_option("--vocab", ingest.vocab_out, "Vocabulary output")->required();
  ingest_cmd->add_option("--threads", ingest.threads, "Tokenizer threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ingest_cmd->add_option("--write-config", config_out, "Write the effective options to a file")->configurable(false);

  TrainOptions train;
  auto        &config    = train.config;
  auto        *train_cmd = app.add_subcommand("train", "Train skip-gram negative-sampling vectors");
  train_cmd->add_option("tokens,--tokens", train.tokens, "Tokenized corpus")->required();
  train_cmd->add_option("--output,-o", train.output, "Vector file output")->required();
  train_cmd->add_option("--vocab", train.vocab, "Train on this vocabulary instead of recounting");
  train_cmd->add_option("--save-vocab", train.save_vocab, "Write the vocabulary of the trained model");
  train_cmd->add_option("--size", config.dim, "Vector dimension")->check(CLI::PositiveNumber)->capture_default_str();
  train_cmd->add_option("--window", config.window, "Maximum context offset")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--negative", config.negatives, "Negative samples per pair")->capture_default_str();
  train_cmd->add_option("--sample", config.sample, "Subsampling threshold in (0, 1]")
      ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0))
      ->capture_default_str();
  train_cmd->add_option("--iter", config.epochs, "Passes over the corpus")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--min-count", config.min_count, "Minimum term count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--alpha", config.alpha, "Initial learning rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--threads", config.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  train_cmd->add_flag("--exact-sigmoid", config.exact_sigmoid, "Evaluate the sigmoid exactly");
  train_cmd->add_flag("--track-loss", config.track_loss, "Report the mean loss of every epoch");
  train_cmd->add_option("--write-config", config_out, "Write the effective options to a file")->configurable(false);

  StatsOptions stats;
  auto        *stats_cmd = app.add_subcommand("stats", "Vector-length statistics and explorer data");
  stats_cmd->add_option("--vectors", stats.vectors, "Vector file")->required();
  stats_cmd->add_option("--vocab", stats.vocab, "Vocabulary of the vector file")->required();
  stats_cmd->add_option("--tagged", stats.tagged, "Tagger output, one token<TAB>tag per line");
  stats_cmd->add_option("--out-dir", stats.out_dir, "Report directory")->required();
  stats_cmd->add_option("--corpus-name", stats.corpus_name, "Name recorded in the explorer data")
      ->capture_default_str();
  stats_cmd->add_option("--min-tf", stats.min_tf, "Smallest tf in the similarity sample")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stats_cmd->add_option("--max-tf", stats.max_tf, "Largest tf in the similarity sample");
  stats_cmd->add_option("--pairs", stats.pairs, "Similarity pairs to draw")->capture_default_str();
  stats_cmd->add_option("--hist-bins", stats.hist_bins, "Histogram bins over [-1, 1]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stats_cmd->add_option("--top", stats.top, "Length of the frequency list")->capture_default_str();
  stats_cmd->add_option("--seed", stats.seed, "Random seed")->capture_default_str();
  stats_cmd->add_option("--write-config", config_out, "Write the effective options to a file")->configurable(false);

  std::string data_file;
  std::string assets_dir;
  std::string host = "127.0.0.1";
  int         port = 8080;
  auto       *serve_cmd = app.add_subcommand("serve", "Serve the explorer and its data file over HTTP");
  serve_cmd->add_option("data,--data", data_file, "Explorer data file")->required();
  serve_cmd->add_option("--assets", assets_dir, "Explorer asset directory");
  serve_cmd->add_option("--host", host, "Address to listen on")->capture_default_str();
  serve_cmd->add_option("--port", port, "Port, 0 for any free port")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    return app.exit(e);
  }

  try
  {
    if (*ingest_cmd)
    {
      ingest.format = parse_corpus_format(format_name);
      write_config(*ingest_cmd, config_out);
      cmd_ingest(ingest, std::cout);
    }
    else if (*train_cmd)
    {
      write_config(*train_cmd, config_out);
      cmd_train(train, std::cout);
    }
    else if (*stats_cmd)
    {
      write_config(*stats_cmd, config_out);
      cmd_stats(stats, std::cout);
    }
    else if (*serve_cmd)
    {
      ExplorerServer server(data_file, assets_dir);
      int const      bound = server.bind(host, port);
      fmt::print(stderr, "serving {} on http://{}:{}/\n", data_file, host, bound);
      std::fflush(stderr);
      server.listen();
    }
  }
  catch (ConfigError const &e)
  {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  catch (std::exception const &e)
  {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
