#pragma once

#include "wordsig/corpus.hpp"
#include "wordsig/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace wordsig::testing {

/// A word inserted `tf` times into a background corpus. With a non-empty
/// `context` every occurrence is the phrase context[0..pos) word context[pos..).
/// Otherwise occurrences land at uniformly random positions.
struct PlantedWord
{
  std::string              word;
  std::uint64_t            tf = 0;
  std::vector<std::string> context;
  std::size_t              position = 0;
};

struct SyntheticSpec
{
  std::size_t   total_tokens    = 200'000;
  std::size_t   background_size = 2'000;
  double        zipf_exponent   = 1.0;
  std::size_t   document_length = 100;
  std::uint64_t seed            = 1;
};

/// Zipf-distributed background words "w<rank>" in documents of fixed
/// length, with the planted words added on top.
inline TokenizedCorpus make_synthetic_corpus(SyntheticSpec const &spec,
                                             std::vector<PlantedWord> const &planted = {})
{
  Rng rng = make_rng(spec.seed, 97);

  std::size_t planted_tokens = 0;
  for (auto const &p : planted)
  {
    planted_tokens += p.tf * (p.context.size() + 1);
  }
  std::size_t const background =
      spec.total_tokens > planted_tokens ? spec.total_tokens - planted_tokens : 0;

  std::vector<double> cdf(spec.background_size);
  double              acc = 0.0;
  for (std::size_t r = 0; r < spec.background_size; ++r)
  {
    acc += 1.0 / std::pow(static_cast<double>(r + 1), spec.zipf_exponent);
    cdf[r] = acc;
  }
  auto draw_background = [&] {
    double const u = uniform01(rng) * acc;
    auto const   r = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    return "w" + std::to_string(std::min<std::ptrdiff_t>(r, static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  };

  std::size_t const docs = std::max<std::size_t>(1, background / spec.document_length);
  std::vector<TokenSequence> documents(docs);
  for (std::size_t i = 0; i < background; ++i)
  {
    documents[i % docs].push_back(draw_background());
  }

  for (auto const &p : planted)
  {
    for (std::uint64_t n = 0; n < p.tf; ++n)
    {
      auto &doc = documents[uniform_below(rng, static_cast<std::uint32_t>(docs))];
      auto  at  = doc.begin() + uniform_below(rng, static_cast<std::uint32_t>(doc.size() + 1));
      if (p.context.empty())
      {
        doc.insert(at, p.word);
        continue;
      }
      TokenSequence phrase(p.context.begin(), p.context.end());
      phrase.insert(phrase.begin() + static_cast<std::ptrdiff_t>(p.position), p.word);
      doc.insert(at, phrase.begin(), phrase.end());
    }
  }
  return TokenizedCorpus(std::move(documents));
}

}  // namespace wordsig::testing
