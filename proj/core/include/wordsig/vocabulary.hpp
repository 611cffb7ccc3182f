#pragma once

#include "wordsig/corpus.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordsig {

class StopWordList;

using TermIndex = std::uint32_t;

struct VocabEntry
{
  std::string   term;
  std::uint64_t count = 0;
};

namespace detail {
struct StringHash
{
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept
  {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace detail

/// Term -> (dense index, raw count). Index order is descending count with
/// ties broken by lexicographic term order, so index 0 is the most frequent.
class Vocabulary
{
public:
  Vocabulary() = default;

  /// Duplicated terms or zero counts are rejected with std::invalid_argument.
  static Vocabulary from_entries(std::vector<VocabEntry> entries);

  std::size_t size() const noexcept
  {
    return entries_.size();
  }

  bool empty() const noexcept
  {
    return entries_.empty();
  }

  std::string const &term(TermIndex index) const
  {
    return entries_.at(index).term;
  }

  std::uint64_t count(TermIndex index) const
  {
    return entries_.at(index).count;
  }

  std::vector<VocabEntry> const &entries() const noexcept
  {
    return entries_;
  }

  std::optional<TermIndex> find(std::string_view term) const;

  /// Throws NotFoundError for unknown terms.
  TermIndex index(std::string_view term) const;

  /// Sum of all retained counts.
  std::uint64_t total_count() const noexcept
  {
    return total_count_;
  }

private:
  std::vector<VocabEntry>                                                    entries_;
  std::unordered_map<std::string, TermIndex, detail::StringHash, std::equal_to<>> lookup_;
  std::uint64_t                                                              total_count_ = 0;
};

/// Counts every token type and keeps those with count >= min_count. Throws
/// EmptyCorpusError when the corpus holds no tokens.
Vocabulary build_vocabulary(TokenizedCorpus const &corpus, std::uint64_t min_count = 1);

struct TermFrequency
{
  std::string   term;
  std::uint64_t tf = 0;

  bool operator==(TermFrequency const &) const = default;
};

/// Most frequent terms, descending by tf with lexicographic ties. Terms in
/// `stopwords` (when given) and single punctuation characters (when
/// `exclude_punctuation`) are left out.
std::vector<TermFrequency> term_frequency_list(
    Vocabulary const &vocab, StopWordList const *stopwords, bool exclude_punctuation,
    std::size_t top_n = std::numeric_limits<std::size_t>::max());

/// `term<TAB>count` lines in index order.
void       write_vocabulary(std::ostream &out, Vocabulary const &vocab);
Vocabulary read_vocabulary(std::istream &in);

void       save_vocabulary(std::filesystem::path const &path, Vocabulary const &vocab);
Vocabulary load_vocabulary(std::filesystem::path const &path);

}  // namespace wordsig
