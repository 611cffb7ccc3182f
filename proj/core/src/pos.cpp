#include "wordsig/pos.hpp"

#include "wordsig/errors.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

namespace wordsig {

TaggedTokens load_tagged_tokens(std::istream &in)
{
  TaggedTokens tagged;
  std::string  line;
  std::size_t  line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.find_first_not_of(" \t") == std::string::npos)
    {
      continue;
    }
    auto sep = line.find('\t');
    if (sep == std::string::npos)
    {
      sep = line.rfind(' ');
    }
    if (sep == std::string::npos || sep == 0 || sep + 1 >= line.size())
    {
      throw ParseError("expected 'token<TAB>tag'", line_no);
    }
    std::string token = line.substr(0, sep);
    std::string tag   = line.substr(sep + 1);
    if (tag.find_first_of(" \t") != std::string::npos)
    {
      throw ParseError("tag contains whitespace", line_no);
    }
    for (char &c : token)
    {
      if (c >= 'A' && c <= 'Z')
      {
        c = static_cast<char>(c - 'A' + 'a');
      }
    }
    ++tagged[token][tag];
  }
  return tagged;
}

TaggedTokens load_tagged_tokens(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot read " + path.string());
  }
  return load_tagged_tokens(in);
}

std::string assign_majority_tag(TagCounts const &occurrences, TagCounts const &corpus_totals)
{
  if (occurrences.empty())
  {
    throw std::invalid_argument("majority vote over an empty tag multiset");
  }
  auto total = [&](std::string const &tag) -> std::uint64_t {
    auto const it = corpus_totals.find(tag);
    return it == corpus_totals.end() ? 0 : it->second;
  };

  // Map iteration is lexicographic, so strict comparisons keep the smaller tag.
  auto best = occurrences.begin();
  for (auto it = std::next(best); it != occurrences.end(); ++it)
  {
    if (it->second > best->second || (it->second == best->second && total(it->first) > total(best->first)))
    {
      best = it;
    }
  }
  return best->first;
}

WordClass classify_word_class(std::string_view tag) noexcept
{
  static constexpr std::array<std::string_view, 11> kFunctionTags = {
      "IN", "PRP", "PRP$", "WP", "WP$", "DT", "PDT", "WDT", "CC", "MD", "RP"};
  for (auto const t : kFunctionTags)
  {
    if (tag == t)
    {
      return WordClass::kFunction;
    }
  }
  if (tag == "NN" || tag == "NNS")
  {
    return WordClass::kNoun;
  }
  if (tag == "NNP" || tag == "NNPS")
  {
    return WordClass::kProperNoun;
  }
  if (tag == "JJ" || tag == "JJR" || tag == "JJS")
  {
    return WordClass::kAdjective;
  }
  if (tag == "VB" || tag == "VBD" || tag == "VBG" || tag == "VBN" || tag == "VBP" || tag == "VBZ")
  {
    return WordClass::kVerb;
  }
  if (tag == "RB" || tag == "RBR" || tag == "RBS" || tag == "WRB")
  {
    return WordClass::kAdverb;
  }
  return WordClass::kOther;
}

std::string_view to_string(WordClass word_class) noexcept
{
  switch (word_class)
  {
  case WordClass::kNoun:
    return "noun";
  case WordClass::kProperNoun:
    return "proper-noun";
  case WordClass::kAdjective:
    return "adjective";
  case WordClass::kVerb:
    return "verb";
  case WordClass::kAdverb:
    return "adverb";
  case WordClass::kFunction:
    return "function";
  case WordClass::kOther:
    break;
  }
  return "other";
}

PosLexicon PosLexicon::from_tagged_tokens(TaggedTokens const &tagged)
{
  TagCounts totals;
  for (auto const &[term, counts] : tagged)
  {
    for (auto const &[tag, n] : counts)
    {
      totals[tag] += n;
    }
  }
  PosLexicon lexicon;
  for (auto const &[term, counts] : tagged)
  {
    lexicon.tags_.emplace(term, assign_majority_tag(counts, totals));
  }
  return lexicon;
}

std::optional<std::string_view> PosLexicon::tag(std::string_view term) const
{
  auto const it = tags_.find(term);
  if (it == tags_.end())
  {
    return std::nullopt;
  }
  return std::string_view(it->second);
}

std::optional<WordClass> PosLexicon::word_class(std::string_view term) const
{
  if (auto const t = tag(term))
  {
    return classify_word_class(*t);
  }
  return std::nullopt;
}

}  // namespace wordsig
