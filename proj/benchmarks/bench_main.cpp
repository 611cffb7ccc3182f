#include "wordsig/noise_table.hpp"
#include "wordsig/random.hpp"
#include "wordsig/sgns_step.hpp"
#include "wordsig/sigmoid.hpp"
#include "wordsig/tex_strip.hpp"
#include "wordsig/tokenize.hpp"
#include "wordsig/trainer.hpp"

#include "synthetic_corpus.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace wordsig;

namespace {

void BM_SgnsStep(benchmark::State &state)
{
  std::size_t const dim   = static_cast<std::size_t>(state.range(0));
  std::size_t const terms = 10'000;
  Rng               rng   = make_rng(1);
  Matrix<float>     input(terms, dim);
  Matrix<float>     output(terms, dim);
  for (auto &x : input.values())
  {
    x = static_cast<float>(uniform01(rng) - 0.5) / static_cast<float>(dim);
  }
  std::vector<float>     scratch(dim);
  std::vector<TermIndex> negatives(5);
  SigmoidTable const     sigmoid;
  for (auto _ : state)
  {
    auto const center  = uniform_below(rng, terms);
    auto const context = uniform_below(rng, terms);
    for (auto &n : negatives)
    {
      n = uniform_below(rng, terms);
    }
    sgns_step(input, output, center, context, negatives, 0.025f, sigmoid, std::span<float>(scratch));
  }
  benchmark::DoNotOptimize(input.values().data());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SgnsStep)->Arg(50)->Arg(100)->Arg(300);

void BM_NoiseSample(benchmark::State &state)
{
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < counts.size(); ++i)
  {
    counts[i] = 1 + 1'000'000 / (i + 1);
  }
  auto const table = NoiseTable::from_counts(counts);
  Rng        rng   = make_rng(2);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(table.sample(rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NoiseSample)->Arg(1'000)->Arg(100'000);

void BM_StripAndTokenize(benchmark::State &state)
{
  std::string text;
  for (int i = 0; i < 20; ++i)
  {
    text += "We study the $\\mathcal{N}=4$ super Yang-Mills theory \\cite{Maldacena:1997re} on "
            "$S^3 \\times R$, and show that the spectrum (of BPS states) matches. ";
  }
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(normalize_tokenize(strip_tex(text)));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_StripAndTokenize);

void BM_TrainThroughput(benchmark::State &state)
{
  auto const  corpus = testing::make_synthetic_corpus({200'000, 5'000, 1.0, 100, 3});
  TrainConfig config;
  config.dim     = 100;
  config.window  = 5;
  config.epochs  = 1;
  config.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(train(corpus, config).input.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.total_tokens()));
}
BENCHMARK(BM_TrainThroughput)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
