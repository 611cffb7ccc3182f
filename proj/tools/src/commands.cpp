#include "commands.hpp"

#include "wordsig/errors.hpp"
#include "wordsig/plane_export.hpp"
#include "wordsig/pos.hpp"
#include "wordsig/significance.hpp"
#include "wordsig/stopwords.hpp"
#include "wordsig/vector_io.hpp"
#include "wordsig/vocabulary.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <httplib.h>

#include <fstream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace wordsig::cli {

namespace {

std::ofstream open_output(std::filesystem::path const &path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

void require_file(std::filesystem::path const &path, char const *what)
{
  if (!std::filesystem::is_regular_file(path))
  {
    throw std::runtime_error(fmt::format("{} '{}' does not exist", what, path.string()));
  }
}

}  // namespace

IngestSummary cmd_ingest(IngestOptions const &options, std::ostream &log)
{
  if (!std::filesystem::exists(options.input))
  {
    throw std::runtime_error("input '" + options.input.string() + "' does not exist");
  }
  auto const raw    = read_raw_corpus(options.input, options.format);
  auto const corpus = tokenize_corpus(raw, options.threads);
  auto const vocab  = build_vocabulary(corpus, 1);

  save_tokenized_corpus(options.tokens_out, corpus);
  save_vocabulary(options.vocab_out, vocab);

  IngestSummary summary{corpus.document_count(), corpus.total_tokens(), vocab.size()};
  fmt::print(log, "documents: {}\ntokens: {}\naverage tokens per document: {:.1f}\nvocabulary: {}\n",
             summary.documents, summary.tokens,
             static_cast<double>(summary.tokens) / static_cast<double>(summary.documents),
             summary.vocabulary);
  return summary;
}

TrainReport cmd_train(TrainOptions const &options, std::ostream &log)
{
  options.config.validate();
  require_file(options.tokens, "tokenized corpus");
  auto const corpus = load_tokenized_corpus(options.tokens);

  Vocabulary vocab;
  if (!options.vocab.empty())
  {
    auto                    full = load_vocabulary(options.vocab);
    std::vector<VocabEntry> kept;
    for (auto const &e : full.entries())
    {
      if (e.count >= options.config.min_count)
      {
        kept.push_back(e);
      }
    }
    vocab = Vocabulary::from_entries(std::move(kept));
  }
  else
  {
    vocab = build_vocabulary(corpus, options.config.min_count);
  }

  auto const &c = options.config;
  fmt::print(log,
             "training: size={} window={} negative={} sample={} iter={} min-count={} alpha={} "
             "threads={} seed={}\n",
             c.dim, c.window, c.negatives, c.sample, c.epochs, c.min_count, c.alpha, c.workers, c.seed);
  fmt::print(log, "corpus: {} documents, {} tokens, vocabulary {}\n", corpus.document_count(),
             corpus.total_tokens(), vocab.size());

  TrainObserver observer;
  observer.on_epoch = [&log](std::size_t epoch, double alpha) {
    fmt::print(log, "epoch {} done, alpha {:.6g}\n", epoch, alpha);
  };
  TrainReport report;
  auto const  model = train(corpus, std::move(vocab), options.config, &report, observer);

  save_vectors(options.output, model);
  if (!options.save_vocab.empty())
  {
    save_vocabulary(options.save_vocab, model.vocab);
  }
  fmt::print(log, "epochs: {}\ntokens processed: {}\neffective tokens: {}\npairs: {}\nfinal alpha: {:.6g}\n",
             report.epochs, report.tokens_processed, report.tokens_trained, report.pairs,
             report.final_alpha);
  for (std::size_t e = 0; e < report.epoch_loss.size(); ++e)
  {
    fmt::print(log, "epoch {} mean loss: {:.6f}\n", e + 1, report.epoch_loss[e]);
  }
  return report;
}

StatsSummary cmd_stats(StatsOptions const &options, std::ostream &log)
{
  require_file(options.vectors, "vector file");
  require_file(options.vocab, "vocabulary file");
  auto model = attach_vocabulary(load_vectors(options.vectors), load_vocabulary(options.vocab));

  std::optional<PosLexicon> lexicon;
  if (!options.tagged.empty())
  {
    require_file(options.tagged, "tagged token file");
    lexicon = PosLexicon::from_tagged_tokens(load_tagged_tokens(options.tagged));
  }

  std::filesystem::create_directories(options.out_dir);
  auto const stats = word_stats(model, lexicon ? &*lexicon : nullptr);
  auto const bins  = bin_means(stats);

  StatsSummary summary;
  summary.records      = stats.size();
  summary.mean_vec_len = mean_vector(model, 1).length;
  bool const any_repeated =
      std::any_of(stats.begin(), stats.end(), [](WordStat const &s) { return s.tf > 1; });
  if (any_repeated)
  {
    summary.mean_vec_len_tf2 = mean_vector(model, 2).length;
  }

  {
    auto       out = open_output(options.out_dir / "frequency.tsv");
    auto const top = term_frequency_list(model.vocab, &StopWordList::english(), true, options.top);
    out << "rank\tterm\tv\ttf\n";
    for (std::size_t i = 0; i < top.size(); ++i)
    {
      fmt::print(out, "{}\t{}\t{:.4f}\t{}\n", i + 1, top[i].term, vector_length(model, top[i].term),
                 top[i].tf);
    }
  }

  HistogramOptions hist_options;
  hist_options.pair_count = options.pairs;
  hist_options.min_tf     = options.min_tf;
  hist_options.max_tf     = options.max_tf;
  hist_options.bins       = options.hist_bins;
  hist_options.seed       = options.seed;
  fmt::print(log, "similarity histogram: {} pairs, min_tf={}, seed={}\n", options.pairs, options.min_tf,
             options.seed);
  auto const hist     = similarity_histogram(model, hist_options);
  summary.mean_cosine = hist.sample_mean;
  {
    auto out = open_output(options.out_dir / "similarity_hist.csv");
    write_histogram_csv(out, hist);
  }

  {
    auto out = open_output(options.out_dir / "bins.tsv");
    out << "k\tlo\thi\tn\tmean_v\n";
    for (auto const &b : bins)
    {
      fmt::print(out, "{}\t{}\t{}\t{}\t{:.6f}\n", b.k, b.lo, b.hi, b.member_count, b.mean_v);
    }
  }

  if (lexicon)
  {
    auto out = open_output(options.out_dir / "classes.tsv");
    out << "term\ttf\tv\ttag\tclass\n";
    for (auto const &s : stats)
    {
      if (s.pos)
      {
        fmt::print(out, "{}\t{}\t{:.6f}\t{}\t{}\n", s.term, s.tf, s.v, *s.pos,
                   to_string(classify_word_class(*s.pos)));
      }
    }
  }

  PlaneMeta const meta{options.corpus_name, model.dim(), model.vocab.total_count(), summary.mean_vec_len, 1};
  export_plane(options.out_dir / "explorer.json", stats, bins, meta);

  fmt::print(log, "records: {}\nmean cosine similarity: {:.4f}\nmean vector length: {:.4f}\n",
             summary.records, summary.mean_cosine, summary.mean_vec_len);
  if (any_repeated)
  {
    fmt::print(log, "mean vector length (tf > 1): {:.4f}\n", summary.mean_vec_len_tf2);
  }
  return summary;
}

namespace {

constexpr char const *kFallbackPage = R"(<!doctype html>
<html>
<head><meta charset="utf-8"><title>v-tf plane</title></head>
<body>
<p id="status">loading /data</p>
<script>
fetch('/data').then(r => r.json()).then(d => {
  document.getElementById('status').textContent =
    d.meta.corpus_name + ': ' + d.words.length + ' terms, mean vector length ' + d.meta.mean_vec_len.toFixed(3);
});
</script>
</body>
</html>
)";

}  // namespace

struct ExplorerServer::Impl
{
  httplib::Server server;
  std::string     data;
  std::string     index_page;
};

ExplorerServer::ExplorerServer(std::filesystem::path const &data_file, std::filesystem::path const &assets_dir)
  : impl_(std::make_unique<Impl>())
{
  std::ifstream in(data_file, std::ios::binary);
  if (!in)
  {
    throw std::runtime_error("cannot read data file '" + data_file.string() + "'");
  }
  impl_->data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  parse_plane(impl_->data);

  impl_->index_page = kFallbackPage;
  if (!assets_dir.empty())
  {
    if (!std::filesystem::is_directory(assets_dir))
    {
      throw std::runtime_error("assets directory '" + assets_dir.string() + "' does not exist");
    }
    std::ifstream index(assets_dir / "index.html", std::ios::binary);
    if (index)
    {
      impl_->index_page.assign(std::istreambuf_iterator<char>(index), std::istreambuf_iterator<char>());
    }
    impl_->server.set_mount_point("/assets", assets_dir.string());
  }

  impl_->server.Get("/data", [this](httplib::Request const &, httplib::Response &res) {
    res.set_content(impl_->data, "application/json");
  });
  impl_->server.Get("/", [this](httplib::Request const &, httplib::Response &res) {
    res.set_content(impl_->index_page, "text/html; charset=utf-8");
  });
}

ExplorerServer::~ExplorerServer() = default;

int ExplorerServer::bind(std::string const &host, int port)
{
  // The default options add SO_REUSEPORT, which would let a second server share a busy port.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<char const *>(&yes), sizeof(yes));
  });
  if (port == 0)
  {
    int const bound = impl_->server.bind_to_any_port(host);
    if (bound <= 0)
    {
      throw std::runtime_error("cannot bind to " + host);
    }
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port))
  {
    throw std::runtime_error(fmt::format("cannot bind to {}:{} (port in use?)", host, port));
  }
  return port;
}

void ExplorerServer::listen()
{
  impl_->server.listen_after_bind();
}

void ExplorerServer::stop()
{
  impl_->server.stop();
}

}  // namespace wordsig::cli
