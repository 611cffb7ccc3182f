#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace wordsig {

/// Tag -> number of occurrences.
using TagCounts = std::map<std::string, std::uint64_t, std::less<>>;

/// Lowercase token -> tags observed for its occurrences.
using TaggedTokens = std::map<std::string, TagCounts, std::less<>>;

/// Reads tagger output, one `token<TAB>tag` occurrence per line. A single
/// space is accepted as the separator too. Blank lines are skipped; a line
/// without a tag is a ParseError carrying its line number.
TaggedTokens load_tagged_tokens(std::istream &in);
TaggedTokens load_tagged_tokens(std::filesystem::path const &path);

/// Most frequent tag. Ties go to the tag with the larger count in
/// `corpus_totals`, then to the lexicographically smaller tag. Throws
/// std::invalid_argument for an empty multiset.
std::string assign_majority_tag(TagCounts const &occurrences, TagCounts const &corpus_totals = {});

enum class WordClass
{
  kNoun,
  kProperNoun,
  kAdjective,
  kVerb,
  kAdverb,
  kFunction,
  kOther,
};

/// Penn Treebank tag -> word class. Function words are IN, PRP, PRP$, WP,
/// WP$, DT, PDT, WDT, CC, MD and RP; unknown tags map to kOther.
WordClass classify_word_class(std::string_view tag) noexcept;

std::string_view to_string(WordClass word_class) noexcept;

/// Majority tag of every tagged term.
class PosLexicon
{
public:
  PosLexicon() = default;

  static PosLexicon from_tagged_tokens(TaggedTokens const &tagged);

  std::optional<std::string_view> tag(std::string_view term) const;
  std::optional<WordClass>        word_class(std::string_view term) const;

  std::size_t size() const noexcept
  {
    return tags_.size();
  }

private:
  std::map<std::string, std::string, std::less<>> tags_;
};

}  // namespace wordsig
