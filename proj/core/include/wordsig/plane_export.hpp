#pragma once

#include "wordsig/significance.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordsig {

struct PlaneMeta
{
  std::string   corpus_name;
  std::size_t   dim          = 0;
  std::uint64_t total_tokens = 0;
  double        mean_vec_len = 0.0;
  std::uint64_t min_tf       = 1;

  bool operator==(PlaneMeta const &) const = default;
};

/// Contents of an explorer data file.
struct PlaneData
{
  PlaneMeta               meta;
  std::vector<WordStat>   words;
  std::vector<BinSummary> bins;
};

/// Writes the explorer data file:
///   {"meta": {corpus_name, dim, total_tokens, mean_vec_len, min_tf},
///    "words": [{"t", "tf", "v", "pos"}...], "bins": [{"k", "lo", "hi", "n", "mean_v"}...]}
/// Words are ordered by descending tf, then term; `pos` is null when absent.
void export_plane(std::ostream &out, std::span<WordStat const> stats, std::span<BinSummary const> bins,
                  PlaneMeta const &meta);
void export_plane(std::filesystem::path const &path, std::span<WordStat const> stats,
                  std::span<BinSummary const> bins, PlaneMeta const &meta);

/// Parses and validates an explorer data file. Throws ParseError whose
/// message carries the byte offset of a syntax error.
PlaneData parse_plane(std::string_view json);
PlaneData load_plane(std::filesystem::path const &path);

/// `# mean=<m> pairs=<n> min_tf=<t>` followed by `bin_lo,bin_hi,count` lines.
void write_histogram_csv(std::ostream &out, SimilarityHistogram const &hist);

}  // namespace wordsig
